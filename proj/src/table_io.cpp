#include "hyperfield/table_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hyperfield {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + msg);
}

struct LineReader {
  std::istream& in;
  std::string origin;
  int line_no = 0;

  // Next non-blank, non-comment line.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      std::size_t start = raw.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      std::size_t end = raw.find_last_not_of(" \t\r");
      out = raw.substr(start, end - start + 1);
      if (out[0] == '#') continue;
      return true;
    }
    return false;
  }

  std::string expect(const std::string& what) {
    std::string out;
    if (!next(out)) fail(origin, line_no, "unexpected end of file, expected " + what);
    return out;
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string expect_key(LineReader& r, const std::string& key) {
  const std::string line = r.expect("'" + key + ":'");
  if (line.rfind(key + ":", 0) != 0) fail(r.origin, r.line_no, "expected '" + key + ":', got '" + line + "'");
  std::string value = line.substr(key.size() + 1);
  const std::size_t start = value.find_first_not_of(" \t");
  return start == std::string::npos ? "" : value.substr(start);
}

}  // namespace

FiniteHyperfield load_hf(std::istream& in, const std::string& origin) {
  LineReader r{in, origin};

  const std::string name = expect_key(r, "name");
  if (name.empty()) fail(origin, r.line_no, "empty hyperfield name");

  const std::vector<std::string> names = split_ws(expect_key(r, "elements"));
  const int n = static_cast<int>(names.size());
  if (n < 2) fail(origin, r.line_no, "need at least two elements (the zero at index 0 and a one)");
  auto index_of = [&](const std::string& en, int line) -> elem_t {
    for (int i = 0; i < n; ++i)
      if (names[i] == en) return i;
    fail(origin, line, "unknown element name '" + en + "'");
  };

  const std::string one_name = expect_key(r, "one");
  const elem_t one = index_of(one_name, r.line_no);

  if (expect_key(r, "mul") != "") fail(origin, r.line_no, "'mul:' takes no value");
  std::vector<std::vector<elem_t>> mul(n, std::vector<elem_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto row = split_ws(r.expect("a mul table row"));
    if (static_cast<int>(row.size()) != n) fail(origin, r.line_no, "mul row needs exactly " + std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j) mul[i][j] = index_of(row[j], r.line_no);
  }

  if (expect_key(r, "add") != "") fail(origin, r.line_no, "'add:' takes no value");
  std::vector<std::vector<ESet>> add(n, std::vector<ESet>(n));
  for (int i = 0; i < n; ++i) {
    const auto row = split_ws(r.expect("an add table row"));
    if (static_cast<int>(row.size()) != n) fail(origin, r.line_no, "add row needs exactly " + std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j) {
      const std::string& cell = row[j];
      if (cell.size() < 2 || cell.front() != '{' || cell.back() != '}')
        fail(origin, r.line_no, "add entry must be a brace-delimited list, got '" + cell + "'");
      const std::string body = cell.substr(1, cell.size() - 2);
      ESet s;
      std::size_t pos = 0;
      while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        const std::string en = body.substr(pos, comma - pos);
        if (en.empty()) fail(origin, r.line_no, "empty name in add entry '" + cell + "'");
        s.insert(index_of(en, r.line_no));
        pos = comma + 1;
      }
      if (s.empty()) fail(origin, r.line_no, "hyperaddition entries must be nonempty sets");
      add[i][j] = s;
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (mul[i][j] != mul[j][i])
        fail(origin, r.line_no, "mul table is not symmetric at (" + names[i] + ", " + names[j] + ")");
      if (add[i][j] != add[j][i])
        fail(origin, r.line_no, "add table is not symmetric at (" + names[i] + ", " + names[j] + ")");
    }

  return FiniteHyperfield(name, names, one, std::move(mul), std::move(add));
}

FiniteHyperfield load_hf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return load_hf(in, path);
}

std::string format_hf(const FiniteHyperfield& F) {
  std::ostringstream os;
  const int n = F.size();
  os << "name: " << F.name() << '\n';
  os << "elements:";
  for (int i = 0; i < n; ++i) os << ' ' << F.elem_name(i);
  os << '\n';
  os << "one: " << F.elem_name(F.one()) << '\n';
  os << "mul:\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) os << (j ? " " : "") << F.elem_name(F.mul(i, j));
    os << '\n';
  }
  os << "add:\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) os << (j ? " " : "") << F.set_to_string(F.hadd(i, j));
    os << '\n';
  }
  return os.str();
}

void save_hf_file(const FiniteHyperfield& F, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << format_hf(F);
}

PhiMap load_phi(std::istream& in, const FiniteHyperfield& F, const std::string& origin) {
  LineReader r{in, origin};
  std::vector<int> labels(F.size(), -1);
  std::string line;
  while (r.next(line)) {
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) fail(origin, r.line_no, "expected 'element-name: image-index'");
    std::string en = line.substr(0, colon);
    while (!en.empty() && (en.back() == ' ' || en.back() == '\t')) en.pop_back();
    const elem_t e = F.elem_by_name(en);
    if (e == 0) fail(origin, r.line_no, "phi is defined on nonzero elements only");
    if (labels[e] != -1) fail(origin, r.line_no, "duplicate phi entry for '" + en + "'");
    try {
      labels[e] = std::stoi(line.substr(colon + 1));
    } catch (const std::exception&) {
      fail(origin, r.line_no, "image index must be an integer");
    }
    if (labels[e] < 0) fail(origin, r.line_no, "image index must be non-negative");
  }
  for (int e = 1; e < F.size(); ++e)
    if (labels[e] == -1)
      throw std::invalid_argument(origin + ": phi map misses element '" + F.elem_name(e) + "'");
  return PhiMap(std::move(labels));
}

PhiMap load_phi_file(const std::string& path, const FiniteHyperfield& F) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return load_phi(in, F, path);
}

std::string format_phi(const FiniteHyperfield& F, const PhiMap& phi) {
  std::ostringstream os;
  for (int e = 1; e < F.size(); ++e) os << F.elem_name(e) << ": " << phi.of(e) << '\n';
  return os.str();
}

void save_phi_file(const FiniteHyperfield& F, const PhiMap& phi, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << format_phi(F, phi);
}

}  // namespace hyperfield
