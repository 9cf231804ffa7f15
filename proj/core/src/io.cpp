#include "rlcode/io.hpp"

#include "rlcode/errors.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rlcode {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    const auto t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back({number, std::string(t)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

class AlgebraParser {
 public:
  explicit AlgebraParser(std::string_view text) : lines_(content_lines(text)) {}

  AlgebraDocument run() {
    if (lines_.empty()) throw ParseError("empty algebra file");
    const auto [key, rest] = split(lines_[0]);
    if (key != "elements") fail(lines_[0], "the first entry must be 'elements:'");
    names_ = tokens(rest);
    if (names_.size() < 2) fail(lines_[0], "at least two elements are required");
    if (names_.size() > kMaxElements) fail(lines_[0], "too many elements");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], elem(i)).second) fail(lines_[0], "duplicate element '" + names_[i] + "'");
    }

    std::size_t i = 1;
    while (i < lines_.size()) {
      const Line& line = lines_[i];
      const auto [k, r] = split(line);
      if (!seen_.insert(k).second) fail(line, "repeated section '" + k + "'");
      ++i;
      if (k == "kind") {
        kind_ = std::string(trim(r));
        if (kind_ != "wajsberg" && kind_ != "residuated") fail(line, "unknown kind '" + kind_ + "'");
      } else if (k == "circ" || k == "join" || k == "meet" || k == "prod" || k == "impl") {
        if (!trim(r).empty()) fail(line, "table rows start on the next line");
        tables_[k] = read_table(i, line);
      } else if (k == "neg") {
        const auto toks = tokens(r);
        if (toks.size() != names_.size()) fail(line, "neg needs exactly " + std::to_string(names_.size()) + " entries");
        for (const auto& t : toks) neg_.push_back(resolve(line, t));
      } else if (k == "bottom" || k == "top" || k == "one") {
        const auto toks = tokens(r);
        if (toks.size() != 1) fail(line, k + " takes one element");
        constants_[k] = resolve(line, toks[0]);
      } else {
        fail(line, "unknown section '" + k + "'");
      }
    }
    if (kind_.empty()) throw ParseError("missing 'kind:'");
    return kind_ == "wajsberg" ? AlgebraDocument(wajsberg()) : AlgebraDocument(residuated());
  }

 private:
  std::pair<std::string, std::string_view> split(const Line& line) const {
    const std::string_view t = line.text;
    const auto colon = t.find(':');
    if (colon == std::string_view::npos) fail(line, "expected 'key:'");
    return {std::string(trim(t.substr(0, colon))), t.substr(colon + 1)};
  }

  Element resolve(const Line& line, const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) fail(line, "unknown element '" + name + "'");
    return it->second;
  }

  BinaryTable read_table(std::size_t& i, const Line& header) {
    const std::size_t n = names_.size();
    BinaryTable t(n);
    for (std::size_t row = 0; row < n; ++row, ++i) {
      if (i >= lines_.size()) fail(header, "table ends after " + std::to_string(row) + " rows");
      const Line& line = lines_[i];
      if (line.text.find(':') != std::string::npos) fail(line, "table has only " + std::to_string(row) + " rows");
      const auto toks = tokens(line.text);
      if (toks.size() != n) fail(line, "row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(n));
      for (std::size_t col = 0; col < n; ++col) t.set(elem(row), elem(col), resolve(line, toks[col]));
    }
    return t;
  }

  void require(std::initializer_list<const char*> needed, std::initializer_list<const char*> allowed) const {
    for (const char* k : needed)
      if (!seen_.count(k)) throw ParseError(std::string("missing section '") + k + ":' for kind " + kind_);
    for (const auto& k : seen_) {
      bool ok = k == "kind";
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) throw ParseError("section '" + k + ":' does not belong to kind " + kind_);
    }
  }

  WajsbergTables wajsberg() const {
    require({"circ", "neg"}, {"circ", "neg", "one"});
    WajsbergTables w;
    w.names = names_;
    w.circ = tables_.at("circ");
    w.neg = neg_;
    const auto it = constants_.find("one");
    w.one = it != constants_.end() ? it->second : w.circ(elem(0), elem(0));
    return w;
  }

  ResiduatedTables residuated() const {
    require({"join", "meet", "prod", "impl", "bottom", "top"}, {"join", "meet", "prod", "impl", "bottom", "top"});
    ResiduatedTables r;
    r.names = names_;
    r.join = tables_.at("join");
    r.meet = tables_.at("meet");
    r.prod = tables_.at("prod");
    r.impl = tables_.at("impl");
    r.bottom = constants_.at("bottom");
    r.top = constants_.at("top");
    return r;
  }

  std::vector<Line> lines_;
  std::vector<std::string> names_;
  std::map<std::string, Element> index_;
  std::set<std::string> seen_;
  std::string kind_;
  std::map<std::string, BinaryTable> tables_;
  UnaryTable neg_;
  std::map<std::string, Element> constants_;
};

void write_table(std::ostream& os, const char* label, const BinaryTable& t, const std::vector<std::string>& names) {
  os << label << ":\n";
  for (std::size_t x = 0; x < names.size(); ++x) {
    for (std::size_t y = 0; y < names.size(); ++y) os << (y ? " " : "") << names[idx(t(elem(x), elem(y)))];
    os << "\n";
  }
}

void write_elements(std::ostream& os, const std::vector<std::string>& names) {
  os << "elements:";
  for (const auto& nm : names) os << " " << nm;
  os << "\n";
}

}  // namespace

AlgebraDocument parse_algebra(std::string_view text) { return AlgebraParser(text).run(); }

std::string serialize_algebra(const AlgebraDocument& doc) {
  std::ostringstream os;
  if (const auto* w = std::get_if<WajsbergTables>(&doc)) {
    write_elements(os, w->names);
    os << "kind: wajsberg\n";
    write_table(os, "circ", w->circ, w->names);
    os << "neg:";
    for (Element e : w->neg) os << " " << w->names[idx(e)];
    os << "\n";
    if (w->one != w->circ(elem(0), elem(0))) os << "one: " << w->names[idx(w->one)] << "\n";
  } else {
    const auto& r = std::get<ResiduatedTables>(doc);
    write_elements(os, r.names);
    os << "kind: residuated\n";
    write_table(os, "join", r.join, r.names);
    write_table(os, "meet", r.meet, r.names);
    write_table(os, "prod", r.prod, r.names);
    write_table(os, "impl", r.impl, r.names);
    os << "bottom: " << r.names[idx(r.bottom)] << "\n";
    os << "top: " << r.names[idx(r.top)] << "\n";
  }
  return os.str();
}

LoadedAlgebra build_algebra(const AlgebraDocument& doc) {
  if (const auto* w = std::get_if<WajsbergTables>(&doc)) {
    auto algebra = WajsbergAlgebra::make(*w);
    auto lattice = algebra.lattice();
    return {std::move(algebra), std::move(lattice)};
  }
  return {std::nullopt, ResiduatedLattice::make(std::get<ResiduatedTables>(doc))};
}

FuzzySubset parse_fuzzy(const ResiduatedLattice& l, std::string_view text) {
  std::vector<std::optional<Grade>> grades(l.size());
  for (const auto& line : content_lines(text)) {
    const auto eq = line.text.find('=');
    if (eq == std::string::npos) fail(line, "expected 'element = grade'");
    const std::string name(trim(std::string_view(line.text).substr(0, eq)));
    const auto e = l.find(name);
    if (!e) fail(line, "unknown element '" + name + "'");
    if (grades[idx(*e)]) fail(line, "element '" + name + "' listed twice");
    try {
      grades[idx(*e)] = parse_grade(std::string_view(line.text).substr(eq + 1));
    } catch (const ParseError& err) {
      fail(line, err.what());
    }
  }
  std::vector<Grade> out;
  out.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!grades[i]) throw ParseError("no grade for element '" + l.names()[i] + "'");
    out.push_back(*grades[i]);
  }
  return FuzzySubset(l.id(), std::move(out));
}

std::string serialize_fuzzy(const ResiduatedLattice& l, const FuzzySubset& mu) {
  std::ostringstream os;
  for (std::size_t i = 0; i < l.size(); ++i) os << l.names()[i] << " = " << format_grade(mu.grades()[i]) << "\n";
  return os.str();
}

BitMatrix parse_matrix(std::string_view text) {
  std::vector<BitVector> rows;
  for (const auto& line : content_lines(text)) {
    try {
      rows.push_back(BitVector::from_string(line.text));
    } catch (const ParseError& err) {
      fail(line, err.what());
    }
    if (rows.back().size() != rows.front().size()) fail(line, "row length differs from the first row");
  }
  if (rows.empty()) throw ParseError("matrix file has no rows");
  return BitMatrix(std::move(rows));
}

std::string serialize_matrix(const BitMatrix& m, bool header) {
  std::ostringstream os;
  if (header) os << "# rows=" << m.rows() << " cols=" << m.cols() << "\n";
  for (const auto& r : m.row_vectors()) os << r.to_string() << "\n";
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace rlcode
