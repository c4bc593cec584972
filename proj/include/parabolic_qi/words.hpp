#pragma once

// Braid words over the Artin-Tits groups of type A_n and B_n, strand
// permutations, proper connected intervals and the named elements a_i,
// tau_I and the shift operator.

#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pqi {

/// Largest supported rank; type A_n braids live on n+1 <= kMaxStrands strands.
inline constexpr int kMaxRank = 15;
inline constexpr int kMaxStrands = kMaxRank + 1;

enum class Type { A, B };

inline char type_char(Type t) { return t == Type::A ? 'A' : 'B'; }

struct GroupType {
  Type type = Type::A;
  int rank = 3;

  /// Strands of the type-A braid group carrying this group (type B via eta).
  int strands() const { return rank + 1; }

  friend bool operator==(const GroupType&, const GroupType&) = default;
};

inline GroupType make_group(Type type, int rank) {
  if (rank < 2 || rank > kMaxRank)
    throw std::invalid_argument("rank must lie in [2, " + std::to_string(kMaxRank) +
                                "], got " + std::to_string(rank));
  return GroupType{type, rank};
}
inline GroupType type_a(int rank) { return make_group(Type::A, rank); }
inline GroupType type_b(int rank) { return make_group(Type::B, rank); }

/// A signed generator sequence. Letter +i is the i-th standard generator,
/// -i its inverse. The empty sequence is the identity.
struct BraidWord {
  GroupType group;
  std::vector<int> letters;

  BraidWord() = default;
  explicit BraidWord(GroupType g) : group(g) {}
  BraidWord(GroupType g, std::vector<int> ls) : group(g), letters(std::move(ls)) {
    for (int l : letters) {
      if (l == 0 || std::abs(l) > group.rank)
        throw std::out_of_range("letter " + std::to_string(l) + " outside [1, " +
                                std::to_string(group.rank) + "]");
    }
  }

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  BraidWord& operator*=(const BraidWord& rhs) {
    if (!(group == rhs.group)) throw std::invalid_argument("concatenating words of different groups");
    letters.insert(letters.end(), rhs.letters.begin(), rhs.letters.end());
    return *this;
  }
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord identity_word(GroupType g) { return BraidWord(g); }

inline BraidWord power(const BraidWord& w, int e);

inline BraidWord inverse(const BraidWord& w) {
  BraidWord out(w.group);
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

inline BraidWord power(const BraidWord& w, int e) {
  BraidWord base = e < 0 ? inverse(w) : w;
  BraidWord out(w.group);
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return out;
}

/// Cancels adjacent x x^-1 pairs.
inline BraidWord free_reduce(const BraidWord& w) {
  BraidWord out(w.group);
  out.letters.reserve(w.size());
  for (int l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

/// Parses whitespace-separated nonzero integers, e.g. "1 -2 3".
inline BraidWord parse_word(std::string_view text, GroupType group) {
  BraidWord out(group);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw std::invalid_argument("malformed token '" + std::string(token) + "'");
    if (value == 0) throw std::invalid_argument("zero is not a generator");
    if (std::abs(value) > group.rank)
      throw std::out_of_range("generator " + std::string(token) + " out of range for rank " +
                              std::to_string(group.rank));
    out.letters.push_back(value);
    pos = end;
  }
  return out;
}

inline std::string format_word(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

/// Permutation of strand positions {1..size}: operator[](p) is the end
/// position of the strand that starts at p. Keeps its inverse alongside so
/// that composing with an adjacent transposition on either side is O(1).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int size) {
    if (size < 1 || size > kMaxStrands) throw std::invalid_argument("bad permutation size");
    Permutation p;
    p.size_ = size;
    for (int i = 0; i < size; ++i) p.img_[i] = p.inv_[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  static Permutation from_images(const std::vector<int>& images) {
    Permutation p = identity(static_cast<int>(images.size()));
    std::array<bool, kMaxStrands> seen{};
    for (int i = 0; i < p.size_; ++i) {
      int v = images[i] - 1;
      if (v < 0 || v >= p.size_ || seen[v]) throw std::invalid_argument("images do not form a bijection");
      seen[v] = true;
      p.img_[i] = static_cast<std::uint8_t>(v);
      p.inv_[v] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  int size() const { return size_; }
  int operator[](int start) const { return img_[start - 1] + 1; }
  int preimage(int end) const { return inv_[end - 1] + 1; }

  /// Follow this permutation by the transposition (i, i+1) of positions.
  void then_swap(int i) {
    std::swap(inv_[i - 1], inv_[i]);
    img_[inv_[i - 1]] = static_cast<std::uint8_t>(i - 1);
    img_[inv_[i]] = static_cast<std::uint8_t>(i);
  }
  /// Precede this permutation by the transposition (i, i+1).
  void swap_first(int i) {
    std::swap(img_[i - 1], img_[i]);
    inv_[img_[i - 1]] = static_cast<std::uint8_t>(i - 1);
    inv_[img_[i]] = static_cast<std::uint8_t>(i);
  }

  /// The permutation "this, then after".
  Permutation then(const Permutation& after) const {
    Permutation p = identity(size_);
    for (int i = 0; i < size_; ++i) {
      p.img_[i] = after.img_[img_[i]];
      p.inv_[p.img_[i]] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  Permutation inverse() const {
    Permutation p = *this;
    std::swap(p.img_, p.inv_);
    return p;
  }

  bool is_identity() const {
    for (int i = 0; i < size_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  std::vector<int> images() const {
    std::vector<int> out(size_);
    for (int i = 0; i < size_; ++i) out[i] = img_[i] + 1;
    return out;
  }

  std::uint64_t pack() const {
    std::uint64_t key = 0;
    for (int i = 0; i < size_; ++i) key = (key << 4) | img_[i];
    return key;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    if (a.size_ != b.size_) return false;
    for (int i = 0; i < a.size_; ++i)
      if (a.img_[i] != b.img_[i]) return false;
    return true;
  }

 private:
  std::array<std::uint8_t, kMaxStrands> img_{};
  std::array<std::uint8_t, kMaxStrands> inv_{};
  int size_ = 0;
};

/// Strand permutation of a type-A word; perm(u*v) is perm(u) followed by perm(v).
inline Permutation permutation_of(const BraidWord& w) {
  if (w.group.type != Type::A) throw std::invalid_argument("permutation_of expects a type-A word");
  Permutation p = Permutation::identity(w.group.strands());
  for (int l : w.letters) p.then_swap(std::abs(l));
  return p;
}

/// True iff the first strand ends in the first position.
inline bool is_one_pure(const BraidWord& w) { return permutation_of(w)[1] == 1; }

/// Proper connected subinterval {m, ..., m+k-1} of [n].
struct Interval {
  int m = 1;
  int k = 1;
  int n = 2;

  int min() const { return m; }
  int max() const { return m + k - 1; }
  bool contains(int i) const { return i >= m && i <= max(); }
  /// Punctures enclosed by the standard curve: m .. m+k.
  bool encloses(int puncture) const { return puncture >= m && puncture <= m + k; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline Interval make_interval(int m, int k, int n) {
  if (k < 1 || m < 1 || m + k - 1 > n)
    throw std::invalid_argument("interval {" + std::to_string(m) + ".." + std::to_string(m + k - 1) +
                                "} is not a connected subinterval of [" + std::to_string(n) + "]");
  if (m == 1 && k == n) throw std::invalid_argument("interval equals [n]; not proper");
  return Interval{m, k, n};
}

/// {i+1 : i in I}; requires max(I) < n.
inline Interval shifted(const Interval& I) { return make_interval(I.m + 1, I.k, I.n); }

inline std::string format_interval(const Interval& I) {
  std::string out = "{";
  for (int i = I.m; i <= I.max(); ++i) {
    if (i > I.m) out += ',';
    out += std::to_string(i);
  }
  return out + "}";
}

/// All proper connected subintervals of [n], ordered by m then k.
inline std::vector<Interval> intervals(int n) {
  if (n < 2) throw std::invalid_argument("intervals requires n >= 2");
  std::vector<Interval> out;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; m + k - 1 <= n; ++k)
      if (!(m == 1 && k == n)) out.push_back(Interval{m, k, n});
  return out;
}

/// a_i = sigma_i ... sigma_1 (identity for i = 0).
inline BraidWord coset_rep(int i, int n) {
  if (i < 0 || i > n) throw std::out_of_range("coset_rep index " + std::to_string(i) + " outside [0, n]");
  BraidWord out(type_a(n));
  for (int j = i; j >= 1; --j) out.letters.push_back(j);
  return out;
}

/// The 1-pure braid carrying C'_I onto the round curve around punctures 1..k+1:
/// blocks (sigma_j ... sigma_{j+k-1}) for j = m down to 2.
inline BraidWord tau_of(const Interval& I) {
  make_interval(I.m, I.k, I.n);
  BraidWord out(type_a(I.n));
  for (int j = I.m; j >= 2; --j)
    for (int i = j; i <= j + I.k - 1; ++i) out.letters.push_back(i);
  return out;
}

/// sigma_i -> sigma_{i+1}, from A_{1..n-1} into A_{2..n}.
inline BraidWord shift(const BraidWord& w) {
  BraidWord out(w.group);
  out.letters.reserve(w.size());
  for (int l : w.letters) {
    if (std::abs(l) >= w.group.rank) throw std::invalid_argument("shift: letter with index n present");
    out.letters.push_back(l > 0 ? l + 1 : l - 1);
  }
  return out;
}

/// Coxeter label m_{ab} of the A_n / B_n path graphs (edge 1-2 labelled 4 in type B).
inline int coxeter_label(Type t, int a, int b) {
  if (a > b) std::swap(a, b);
  if (b - a != 1) return 2;
  if (t == Type::B && a == 1) return 4;
  return 3;
}

/// Pi(a, b; m): alternating product of length m starting with a.
inline BraidWord alternating_product(GroupType g, int a, int b, int m) {
  BraidWord out(g);
  for (int i = 0; i < m; ++i) out.letters.push_back(i % 2 == 0 ? a : b);
  return out;
}

inline std::vector<std::pair<BraidWord, BraidWord>> presentation_relators(GroupType g) {
  std::vector<std::pair<BraidWord, BraidWord>> out;
  for (int a = 1; a <= g.rank; ++a)
    for (int b = a + 1; b <= g.rank; ++b) {
      int m = coxeter_label(g.type, a, b);
      out.emplace_back(alternating_product(g, a, b, m), alternating_product(g, b, a, m));
    }
  return out;
}

}  // namespace pqi
