#include "geoinv/poly.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace geoinv {

double evaluate_monomial(const MonomialEntry& entry, const MomentTable& table) {
  double v = 1.0;
  for (const auto& [idx, power] : entry.factors()) {
    const double mu = table.at(idx);
    for (int k = 0; k < power; ++k) v *= mu;
  }
  return v;
}

double evaluate(const InvariantPolynomial& inv, const MomentTable& table) {
  if (inv.dim != table.dim()) throw std::invalid_argument("dimension-mismatch between invariant and table");
  if (inv.max_order() > table.max_order())
    throw std::out_of_range("insufficient-order: invariant needs order " +
                            std::to_string(inv.max_order()) + ", table has " +
                            std::to_string(table.max_order()));
  const double mu0 = table.mu0();
  if (!(mu0 > 0.0)) throw std::invalid_argument("degenerate-cloud: mu_0 <= 0");

  std::vector<double> vals;
  vals.reserve(inv.terms.size());
  for (const auto& [entry, coef] : inv.terms) vals.push_back(to_double(coef) * evaluate_monomial(entry, table));
  std::stable_sort(vals.begin(), vals.end(),
                   [](double x, double y) { return std::abs(x) > std::abs(y); });
  double sum = 0.0, comp = 0.0;
  for (double v : vals) {  // Neumaier
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double denom = 1.0;
  for (int k = 0; k < inv.denominator_power; ++k) denom *= mu0;
  return (sum + comp) / denom;
}

Rat RationalMomentTable::at(const MultiIndex& idx) const {
  const auto it = values.find(idx.exponents());
  if (it == values.end()) throw std::out_of_range("insufficient-order: no rational moment for " + idx.str());
  return it->second;
}

Rat RationalMomentTable::mu0() const {
  return at(MultiIndex::zero(dim));
}

Rat evaluate_exact(const InvariantPolynomial& inv, const RationalMomentTable& table) {
  if (inv.dim != table.dim) throw std::invalid_argument("dimension-mismatch between invariant and table");
  Rat sum = 0;
  for (const auto& [entry, coef] : inv.terms) {
    Rat v = coef;
    for (const auto& [idx, power] : entry.factors()) {
      const Rat mu = table.at(idx);
      for (int k = 0; k < power; ++k) v *= mu;
    }
    sum += v;
  }
  const Rat mu0 = table.mu0();
  if (mu0 == 0) throw std::invalid_argument("degenerate-cloud: mu_0 == 0");
  Rat denom = 1;
  for (int k = 0; k < inv.denominator_power; ++k) denom *= mu0;
  return sum / denom;
}

namespace {

std::string index_str(const MultiIndex& idx) { return idx.str(); }

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

std::string parts_str(const std::vector<std::pair<int, int>>& parts) {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << '(' << parts[i].first << ',' << parts[i].second << ')';
  }
  return os.str();
}

// "(2,0)" -> ints; `what` names the field for diagnostics
std::vector<int> parse_tuple(std::string_view s, int line, const char* what) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError(line, std::string("expected parenthesized ") + what);
  std::vector<int> out;
  std::string tok;
  std::istringstream is(std::string(s.substr(1, s.size() - 2)));
  while (std::getline(is, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(line, std::string("bad integer in ") + what + ": '" + tok + "'");
    }
  }
  if (out.empty()) throw ParseError(line, std::string("empty ") + what);
  return out;
}

// "(2,1),(5,2)" -> part list
std::vector<std::pair<int, int>> parse_parts(std::string_view s, int line) {
  std::vector<std::pair<int, int>> parts;
  size_t at = 0;
  while (at < s.size()) {
    const size_t close = s.find(')', at);
    if (s[at] != '(' || close == std::string_view::npos) throw ParseError(line, "bad desc part list");
    const std::vector<int> t = parse_tuple(s.substr(at, close - at + 1), line, "desc part");
    if (t.size() != 2) throw ParseError(line, "desc parts must be (order,degree) pairs");
    parts.emplace_back(t[0], t[1]);
    at = close + 1;
    if (at < s.size()) {
      if (s[at] != ',') throw ParseError(line, "expected ',' between desc parts");
      ++at;
    }
  }
  if (parts.empty()) throw ParseError(line, "empty desc");
  return parts;
}

Rat parse_rat(std::string_view s, int line) {
  const size_t slash = s.find('/');
  if (slash == std::string_view::npos) throw ParseError(line, "coefficient must be <num>/<den>");
  try {
    const Int num(std::string(s.substr(0, slash)));
    const Int den(std::string(s.substr(slash + 1)));
    if (den <= 0) throw std::invalid_argument("denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw ParseError(line, "bad rational coefficient '" + std::string(s) + "'");
  }
}

}  // namespace

std::string serialize(std::span<const InvariantPolynomial> invs, int dim) {
  for (const auto& inv : invs)
    if (inv.dim != dim) throw std::invalid_argument("dimension-mismatch: invariant dim differs from file dim");
  std::ostringstream os;
  os << "geoinv v1 dim=" << dim << "\n";
  for (const auto& inv : invs) {
    os << "\n";
    os << "class=" << to_string(inv.cls) << " d=" << inv.denominator_power << " desc="
       << parts_str(inv.desc_parts) << "\n";
    for (const auto& [entry, coef] : inv.terms) {
      os << "term " << rat_str(coef);
      for (const auto& [idx, power] : entry.factors()) os << ' ' << index_str(idx) << '^' << power;
      os << "\n";
    }
  }
  return os.str();
}

std::vector<InvariantPolynomial> parse_invariants(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) throw ParseError(1, "empty document");
  ++lineno;
  {
    std::istringstream hs(line);
    std::string magic, version, dimfield;
    hs >> magic >> version >> dimfield;
    if (magic != "geoinv" || version.empty() || version[0] != 'v' || dimfield.rfind("dim=", 0) != 0)
      throw ParseError(1, "expected header 'geoinv v1 dim=<n>'");
    if (version != "v1") throw UnsupportedVersionError("cannot read format " + version);
  }
  int dim = 0;
  try {
    dim = std::stoi(line.substr(line.find("dim=") + 4));
  } catch (const std::exception&) {
    throw ParseError(1, "bad dim field");
  }
  if (dim < 2) throw ParseError(1, "invalid-dimension: dim must be >= 2");

  std::vector<InvariantPolynomial> out;
  InvariantPolynomial cur;
  bool in_record = false;
  auto flush = [&](int at_line) {
    if (!in_record) return;
    if (cur.terms.empty()) throw ParseError(at_line, "record without term lines");
    out.push_back(std::move(cur));
    cur = {};
    in_record = false;
  };

  while (std::getline(in, line)) {
    ++lineno;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      flush(lineno);
      continue;
    }
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word.rfind("class=", 0) == 0) {
      flush(lineno);
      in_record = true;
      cur.dim = dim;
      cur.cls = [&] {
        try {
          return invariant_class_from(word.substr(6));
        } catch (const std::exception&) {
          throw ParseError(lineno, "unknown class '" + word.substr(6) + "'");
        }
      }();
      std::string dfield, descfield;
      if (!(ls >> dfield >> descfield) || dfield.rfind("d=", 0) != 0 || descfield.rfind("desc=", 0) != 0)
        throw ParseError(lineno, "record header must be 'class=... d=... desc=...'");
      try {
        cur.denominator_power = std::stoi(dfield.substr(2));
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad d field");
      }
      if (cur.denominator_power < 0) throw ParseError(lineno, "d must be >= 0");
      cur.desc_parts = parse_parts(descfield.substr(5), lineno);
    } else if (word == "term") {
      if (!in_record) throw ParseError(lineno, "term line outside a record");
      std::string coef;
      if (!(ls >> coef)) throw ParseError(lineno, "term line without coefficient");
      const Rat c = parse_rat(coef, lineno);
      if (c == 0) throw ParseError(lineno, "zero coefficient");
      std::vector<std::pair<MultiIndex, int>> factors;
      std::string fac;
      while (ls >> fac) {
        const size_t caret = fac.find('^');
        if (caret == std::string::npos) throw ParseError(lineno, "factor must be <idx>^<pow>");
        const std::vector<int> exps = parse_tuple(fac.substr(0, caret), lineno, "multi-index");
        if (static_cast<int>(exps.size()) != dim) throw ParseError(lineno, "multi-index dimension mismatch");
        int power = 0;
        try {
          power = std::stoi(fac.substr(caret + 1));
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad factor power");
        }
        if (power < 1) throw ParseError(lineno, "factor power must be >= 1");
        for (int e : exps)
          if (e < 0) throw ParseError(lineno, "negative exponent");
        factors.emplace_back(MultiIndex(exps), power);
      }
      if (factors.empty()) throw ParseError(lineno, "term without factors");
      cur.terms.emplace_back(MonomialEntry(std::move(factors)), c);
    } else {
      throw ParseError(lineno, "unexpected line '" + line + "'");
    }
  }
  flush(lineno + 1);
  return out;
}

std::vector<InvariantPolynomial> load_invariants_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open invariants file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_invariants(buf.str());
}

void save_invariants_file(const std::string& path, std::span<const InvariantPolynomial> invs, int dim) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << serialize(invs, dim);
}

}  // namespace geoinv
