#include "coxeter/system.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cox {

CoxeterSystem::CoxeterSystem(std::vector<std::string> names, CoxeterMatrix matrix)
    : names_(std::move(names)), matrix_(std::move(matrix)) {
  if (static_cast<int>(names_.size()) != matrix_.size())
    throw InvalidArgument("name count does not match matrix size");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw InvalidArgument("duplicate generator name: " + n);
}

const std::string& CoxeterSystem::name(int i) const {
  if (i < 0 || i >= rank()) throw InvalidArgument("generator index out of range");
  return names_[i];
}

int CoxeterSystem::index_of(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::string CoxeterSystem::serialize() const {
  std::ostringstream out;
  out << "gens";
  for (const auto& n : names_) out << ' ' << n;
  out << '\n';
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) {
      MValue v = m(i, j);
      if (v == MValue::finite(2)) continue;
      out << "pair " << names_[i] << ' ' << names_[j] << ' ' << v.str() << '\n';
    }
  return out.str();
}

std::string CoxeterSystem::fingerprint() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : serialize()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

void check_name(int line, const std::string& n) {
  if (n == "e") throw ParseError(line, "generator name 'e' is reserved for the empty word");
  if (n.find(',') != std::string::npos)
    throw ParseError(line, "generator name may not contain ','");
}

}  // namespace

CoxeterSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::vector<std::string> names;
  bool have_gens = false;
  CoxeterMatrix matrix;
  std::set<std::pair<int, int>> listed;

  auto index_of = [&](const std::string& n) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    return -1;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (!have_gens) {
      if (toks[0] != "gens") throw ParseError(lineno, "expected 'gens <name>...' first");
      if (toks.size() < 2) throw ParseError(lineno, "at least one generator is required");
      for (size_t i = 1; i < toks.size(); ++i) {
        check_name(lineno, toks[i]);
        if (index_of(toks[i]) >= 0)
          throw ParseError(lineno, "duplicate generator name: " + toks[i]);
        names.push_back(toks[i]);
      }
      if (names.size() > 32) throw ParseError(lineno, "at most 32 generators are supported");
      matrix = CoxeterMatrix(static_cast<int>(names.size()));
      for (int i = 0; i < matrix.size(); ++i)
        for (int j = i + 1; j < matrix.size(); ++j) matrix.set(i, j, MValue::finite(2));
      have_gens = true;
      continue;
    }

    if (toks[0] != "pair") throw ParseError(lineno, "expected 'pair <name> <name> <m>'");
    if (toks.size() != 4) throw ParseError(lineno, "expected 'pair <name> <name> <m>'");
    int i = index_of(toks[1]);
    if (i < 0) throw ParseError(lineno, "unknown generator name: " + toks[1]);
    int j = index_of(toks[2]);
    if (j < 0) throw ParseError(lineno, "unknown generator name: " + toks[2]);
    if (i == j) throw ParseError(lineno, "pair must name two distinct generators");

    MValue m;
    if (toks[3] == "inf") {
      m = MValue::inf();
    } else {
      std::uint64_t value = 0;
      for (char c : toks[3]) {
        if (c < '0' || c > '9') throw ParseError(lineno, "malformed integer: " + toks[3]);
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > 1000000) throw ParseError(lineno, "m-value too large: " + toks[3]);
      }
      if (value < 2) throw ParseError(lineno, "m-value must be >= 2 or inf for a distinct pair");
      m = MValue::finite(static_cast<std::uint32_t>(value));
    }

    auto key = std::minmax(i, j);
    if (!listed.insert({key.first, key.second}).second)
      throw ParseError(lineno, "duplicate pair line for " + toks[1] + " " + toks[2]);
    matrix.set(i, j, m);
  }

  if (!have_gens) throw ParseError(0, "missing 'gens' line");
  return CoxeterSystem(std::move(names), std::move(matrix));
}

void check_subset(const CoxeterSystem& sys, const GenSet& T) {
  if (!T.subset_of(GenSet::all(sys.rank())))
    throw InvalidArgument("generator subset out of range");
}

std::vector<int> subsystem_index_map(const GenSet& T) { return T.indices(); }

CoxeterSystem induced_subsystem(const CoxeterSystem& sys, const GenSet& T) {
  check_subset(sys, T);
  auto idx = T.indices();
  std::vector<std::string> names;
  names.reserve(idx.size());
  for (int i : idx) names.push_back(sys.name(i));
  CoxeterMatrix matrix(static_cast<int>(idx.size()));
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b)
      matrix.set(static_cast<int>(a), static_cast<int>(b), sys.m(idx[a], idx[b]));
  return CoxeterSystem(std::move(names), std::move(matrix));
}

std::vector<GenSet> components(const CoxeterSystem& sys, const GenSet& T) {
  check_subset(sys, T);
  std::vector<GenSet> out;
  GenSet remaining = T;
  while (!remaining.empty()) {
    int seed = remaining.indices().front();
    GenSet comp = GenSet::single(seed);
    // flood fill across diagram edges (m != 1,2)
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i : comp.indices())
        for (int j : (remaining - comp).indices()) {
          MValue m = sys.m(i, j);
          if (m.is_inf() || m.value() >= 3) {
            comp.add(j);
            grew = true;
          }
        }
    }
    out.push_back(comp);
    remaining = remaining - comp;
  }
  std::sort(out.begin(), out.end(), GenSet::order_before);
  return out;
}

}  // namespace cox
