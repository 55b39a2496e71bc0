#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "coxeter/errors.hpp"

namespace cox {

// An entry of a Coxeter matrix: an integer m >= 1, or infinity.
class MValue {
 public:
  MValue() = default;  // 1, the diagonal value
  static MValue finite(std::uint32_t m) {
    if (m == 0) throw InvalidArgument("matrix entry must be >= 1");
    MValue v;
    v.raw_ = m;
    return v;
  }
  static MValue inf() {
    MValue v;
    v.raw_ = 0;
    return v;
  }

  bool is_finite() const { return raw_ != 0; }
  bool is_inf() const { return raw_ == 0; }
  std::uint32_t value() const {
    if (raw_ == 0) throw InvalidArgument("entry is infinite");
    return raw_;
  }
  std::string str() const { return raw_ == 0 ? "inf" : std::to_string(raw_); }

  bool operator==(const MValue&) const = default;

 private:
  std::uint32_t raw_ = 1;  // 0 encodes infinity; never exposed
};

// A subset of the generator indices {0, ..., rank-1}. Ranks are capped at 32.
//
// The deterministic order used throughout (reports, witness selection) is
// lexicographic on the ascending index sequences, so {0} < {0,1} < {0,2} < {1}.
class GenSet {
 public:
  GenSet() = default;
  GenSet(std::initializer_list<int> indices) {
    for (int i : indices) add(i);
  }
  static GenSet all(int rank) {
    GenSet s;
    s.bits_ = rank >= 32 ? ~0u : ((1u << rank) - 1u);
    return s;
  }
  static GenSet single(int i) {
    GenSet s;
    s.add(i);
    return s;
  }
  static GenSet from_bits(std::uint32_t bits) {
    GenSet s;
    s.bits_ = bits;
    return s;
  }

  void add(int i) { bits_ |= (1u << check(i)); }
  void remove(int i) { bits_ &= ~(1u << check(i)); }
  bool contains(int i) const { return i >= 0 && i < 32 && (bits_ >> i) & 1u; }
  int size() const { return __builtin_popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }

  GenSet with(int i) const {
    GenSet s = *this;
    s.add(i);
    return s;
  }
  GenSet without(int i) const {
    GenSet s = *this;
    s.remove(i);
    return s;
  }
  bool subset_of(const GenSet& o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend GenSet operator&(GenSet a, GenSet b) { return from_bits(a.bits_ & b.bits_); }
  friend GenSet operator|(GenSet a, GenSet b) { return from_bits(a.bits_ | b.bits_); }
  friend GenSet operator-(GenSet a, GenSet b) { return from_bits(a.bits_ & ~b.bits_); }

  bool operator==(const GenSet&) const = default;

  // Lexicographic order on ascending index sequences.
  static bool order_before(const GenSet& a, const GenSet& b) {
    std::uint32_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      int i = __builtin_ctz(x), j = __builtin_ctz(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

 private:
  static int check(int i) {
    if (i < 0 || i >= 32) throw InvalidArgument("generator index out of range");
    return i;
  }
  std::uint32_t bits_ = 0;
};

// Symmetric matrix of m-values: 1 on the diagonal, >= 2 off it.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  explicit CoxeterMatrix(int size) : size_(size), entries_(size * size) {
    if (size < 0 || size > 32) throw InvalidArgument("rank must be between 0 and 32");
  }

  int size() const { return size_; }
  MValue at(int i, int j) const { return entries_[idx(i, j)]; }

  // Sets both (i,j) and (j,i); rejects invariant violations.
  void set(int i, int j, MValue m) {
    if (i == j) {
      if (!(m == MValue::finite(1))) throw InvalidArgument("diagonal entries must be 1");
      return;
    }
    if (m.is_finite() && m.value() < 2)
      throw InvalidArgument("off-diagonal entries must be >= 2 or inf");
    entries_[idx(i, j)] = m;
    entries_[idx(j, i)] = m;
  }

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  int idx(int i, int j) const {
    if (i < 0 || i >= size_ || j < 0 || j >= size_)
      throw InvalidArgument("matrix index out of range");
    return i * size_ + j;
  }
  int size_ = 0;
  std::vector<MValue> entries_;  // defaults to 1; off-diagonals set to 2 at build
};

// A Coxeter system: generator names plus the matrix. Generator identity is the
// positional index; names appear only at the I/O boundary.
class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  CoxeterSystem(std::vector<std::string> names, CoxeterMatrix matrix);

  int rank() const { return matrix_.size(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const;
  MValue m(int i, int j) const { return matrix_.at(i, j); }

  // Index of a generator name, or -1.
  int index_of(const std::string& name) const;

  // Canonical text form: `gens ...` plus one `pair` line per off-diagonal
  // entry != 2, in index order. Re-parsing it reproduces the system.
  std::string serialize() const;

  // FNV-1a hash of the canonical serialization, as 16 hex digits.
  std::string fingerprint() const;

  bool operator==(const CoxeterSystem&) const = default;

 private:
  std::vector<std::string> names_;
  CoxeterMatrix matrix_;
};

// Parses the line-oriented system format:
//   gens a b c
//   pair a b 3
//   pair b c inf
// `#` starts a comment; unlisted pairs default to m = 2; duplicate pair lines
// are an error. The name `e` is reserved for the empty word.
CoxeterSystem parse_system(const std::string& text);

// The system on T with the restricted matrix. Generators keep their relative
// order; names carry over.
CoxeterSystem induced_subsystem(const CoxeterSystem& sys, const GenSet& T);

// Maps indices of induced_subsystem(sys, T) back to indices of sys.
std::vector<int> subsystem_index_map(const GenSet& T);

// Connected components of the Coxeter diagram restricted to T (edges where
// m != 1,2), ordered by least member.
std::vector<GenSet> components(const CoxeterSystem& sys, const GenSet& T);

// Throws InvalidArgument unless T only uses valid generator indices.
void check_subset(const CoxeterSystem& sys, const GenSet& T);

}  // namespace cox
