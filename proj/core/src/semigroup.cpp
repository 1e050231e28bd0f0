#include "numsg/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace numsg {

namespace {

constexpr std::size_t words_for(int bits) { return (static_cast<std::size_t>(bits) + 63) / 64; }

// Bits [lo, hi) of a word whose first bit sits at `base`.
constexpr std::uint64_t range_mask(long long base, long long lo, long long hi) {
  long long from = std::max(lo - base, 0LL);
  long long to = std::min(hi - base, 64LL);
  if (from >= to) return 0;
  std::uint64_t upper = to == 64 ? ~0ULL : ((1ULL << to) - 1);
  std::uint64_t lower = (1ULL << from) - 1;
  return upper & ~lower;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() = default;

NumericalSemigroup::NumericalSemigroup(int conductor, std::vector<std::uint64_t> words)
    : conductor_(conductor), words_(std::move(words)) {
  words_.resize(std::max(words_.size(), words_for(conductor_)));
  while (conductor_ > 0 && bit(conductor_ - 1)) --conductor_;
  words_.resize(words_for(conductor_));
  if (!words_.empty() && (conductor_ & 63) != 0) {
    words_.back() &= (1ULL << (conductor_ & 63)) - 1;
  }
}

bool NumericalSemigroup::contains(long long x) const noexcept {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return bit(static_cast<int>(x));
}

std::uint64_t NumericalSemigroup::member_word(long long pos) const noexcept {
  if (pos <= -64) return 0;
  if (pos < 0) return member_word(0) << (-pos);
  if (pos >= conductor_) return ~0ULL;
  auto w = static_cast<std::size_t>(pos >> 6);
  auto off = static_cast<unsigned>(pos & 63);
  std::uint64_t out = words_[w] >> off;
  if (off != 0 && w + 1 < words_.size()) out |= words_[w + 1] << (64 - off);
  long long tail = conductor_ - pos;  // first bit index at or past c
  if (tail < 64) out |= ~0ULL << tail;
  return out;
}

int NumericalSemigroup::genus() const noexcept {
  int members = 0;
  for (auto w : words_) members += std::popcount(w);
  return conductor_ - members;
}

int NumericalSemigroup::multiplicity() const noexcept {
  if (conductor_ == 0) return 1;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    if (w == 0) bits &= ~1ULL;
    if (bits != 0) return static_cast<int>(w * 64 + std::countr_zero(bits));
  }
  return conductor_;
}

int NumericalSemigroup::left_count() const noexcept {
  if (conductor_ == 0) return 1;
  return conductor_ - genus();
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  for (int i = 1; i < conductor_; ++i) {
    if (!bit(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> NumericalSemigroup::small_elements() const {
  std::vector<int> out;
  for (int i = 0; i < conductor_; ++i) {
    if (bit(i)) out.push_back(i);
  }
  return out;
}

// Every minimal generator lies in [m, c+m): any x >= c+m is m + (x-m) with
// x-m >= c a member. So the decomposable elements are only needed on that
// window, and s + t for members s, t >= m is accumulated word by word.
std::vector<int> NumericalSemigroup::minimal_generators() const {
  if (conductor_ == 0) return {1};
  const int m = multiplicity();
  const long long limit = static_cast<long long>(conductor_) + m;
  std::vector<std::uint64_t> sums(words_for(static_cast<int>(limit)), 0);
  for (long long s = m; 2 * s < limit; ++s) {
    if (!contains(s)) continue;
    for (auto w = static_cast<std::size_t>((s + m) >> 6); w < sums.size(); ++w) {
      long long base = static_cast<long long>(w) * 64;
      sums[w] |= member_word(base - s) & range_mask(base, s + m, limit);
    }
  }
  std::vector<int> gens;
  for (long long x = m; x < limit; ++x) {
    bool decomposable = (sums[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1U;
    if (contains(x) && !decomposable) gens.push_back(static_cast<int>(x));
  }
  return gens;
}

bool NumericalSemigroup::is_minimal_generator(int x) const {
  if (x <= 0 || !contains(x)) return false;
  for (int s = multiplicity(); 2 * s <= x; ++s) {
    if (contains(s) && contains(x - s)) return false;
  }
  return true;
}

// h is special iff 2h is a member and h + s is a member for every nonzero
// member s. For s >= c - h the sum is past the conductor, so only members in
// [m, c - h) need checking.
bool NumericalSemigroup::is_special_gap(int h) const {
  if (h <= 0 || contains(h)) return false;
  if (!contains(2LL * h)) return false;
  const int m = multiplicity();
  const long long end = static_cast<long long>(conductor_) - h;
  for (long long p = m; p < end; p += 64) {
    std::uint64_t src = member_word(p) & range_mask(p, p, end);
    std::uint64_t dst = member_word(p + h);
    if ((src & ~dst) != 0) return false;
  }
  return true;
}

std::vector<int> NumericalSemigroup::special_gaps() const {
  std::vector<int> out;
  for (int h = 1; h < conductor_; ++h) {
    if (!bit(h) && is_special_gap(h)) out.push_back(h);
  }
  return out;
}

int NumericalSemigroup::sub_frobenius() const {
  if (is_ordinary(*this)) throw DomainError("sub-Frobenius number undefined: semigroup is ordinary");
  for (int x = conductor_ - 2; x > 0; --x) {
    if (!bit(x)) return x;
  }
  throw InternalError("non-ordinary semigroup without a second gap");
}

bool operator<(NumericalSemigroup const& a, NumericalSemigroup const& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
  return a.words_ < b.words_;
}

std::size_t NumericalSemigroup::hash() const noexcept {
  std::size_t h = std::hash<int>{}(conductor_);
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

// First (a, t) with a <= t members, a + t < c and a + t missing. Word-level:
// for each member a, members t in [a, c - a) shifted by a must be members.
std::optional<std::pair<int, int>> first_violation(NumericalSemigroup const& s) {
  const int c = s.conductor();
  for (long long a = s.multiplicity(); 2 * a < c; ++a) {
    if (!s.contains(a)) continue;
    const long long end = c - a;
    for (long long p = a; p < end; p += 64) {
      std::uint64_t src = s.member_word(p) & range_mask(p, p, end);
      std::uint64_t bad = src & ~s.member_word(p + a);
      if (bad != 0) {
        return std::pair{static_cast<int>(a), static_cast<int>(p + std::countr_zero(bad))};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> pack(std::span<const int> members, int conductor) {
  std::vector<std::uint64_t> words(words_for(conductor), 0);
  for (int x : members) words[static_cast<std::size_t>(x) >> 6] |= 1ULL << (x & 63);
  return words;
}

void check_element_list(std::span<const int> members_below, int conductor) {
  if (members_below.empty() || members_below.front() != 0) throw MissingZero();
  if (conductor < 0) throw ParseError("conductor must be nonnegative");
  for (std::size_t i = 1; i < members_below.size(); ++i) {
    if (members_below[i] <= members_below[i - 1]) {
      throw ParseError("element list must be strictly increasing");
    }
  }
  if (members_below.size() > 1 && members_below.back() >= conductor) {
    throw ParseError("listed member " + std::to_string(members_below.back()) +
                     " is not below the conductor " + std::to_string(conductor));
  }
}

}  // namespace

std::optional<std::pair<int, int>> find_closure_violation(std::span<const int> members_below,
                                                          int conductor) {
  check_element_list(members_below, conductor);
  if (conductor == 0) return std::nullopt;
  std::vector<char> member(static_cast<std::size_t>(conductor), 0);
  for (int x : members_below) member[static_cast<std::size_t>(x)] = 1;
  for (int a : members_below) {
    if (a == 0) continue;
    for (int b : members_below) {
      if (b < a) continue;
      if (a + b >= conductor) break;
      if (!member[static_cast<std::size_t>(a + b)]) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

NumericalSemigroup NumericalSemigroup::from_small_elements(std::span<const int> members_below,
                                                           int conductor) {
  check_element_list(members_below, conductor);
  if (conductor == 0) return NumericalSemigroup{};
  NumericalSemigroup s(conductor, pack(members_below, conductor));
  if (auto bad = first_violation(s)) throw ClosureViolation(bad->first, bad->second);
  return s;
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
  std::vector<int> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError("gap list has duplicates");
  }
  if (!sorted.empty() && sorted.front() <= 0) {
    throw ParseError("gaps must be positive (0 is always a member)");
  }
  if (sorted.empty()) return NumericalSemigroup{};
  const int conductor = sorted.back() + 1;
  std::vector<int> members;
  std::size_t next_gap = 0;
  for (int x = 0; x < conductor; ++x) {
    if (next_gap < sorted.size() && sorted[next_gap] == x) {
      ++next_gap;
    } else {
      members.push_back(x);
    }
  }
  return from_small_elements(members, conductor);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens) {
  if (gens.empty()) throw ParseError("generator list is empty");
  std::vector<int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() <= 0) throw ParseError("generators must be positive");
  int g = 0;
  for (int x : sorted) g = std::gcd(g, x);
  if (g != 1) throw NotCofinite(g);
  if (sorted.front() == 1) return NumericalSemigroup{};

  // Reachability x = x' + gen until a run of m consecutive members appears;
  // from there on everything is a member.
  const int m = sorted.front();
  std::vector<char> member{1};
  int run = 0;
  for (int x = 1; run < m; ++x) {
    char in = 0;
    for (int gen : sorted) {
      if (gen > x) break;
      if (member[static_cast<std::size_t>(x - gen)]) {
        in = 1;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  const int conductor = static_cast<int>(member.size()) - m;
  std::vector<int> members;
  for (int x = 0; x < conductor; ++x) {
    if (member[static_cast<std::size_t>(x)]) members.push_back(x);
  }
  return NumericalSemigroup(conductor, pack(members, conductor));
}

ElementList modified_elements(NumericalSemigroup const& s, std::optional<int> added,
                              std::optional<int> removed) {
  int conductor = s.conductor();
  if (removed && *removed >= conductor) conductor = *removed + 1;
  ElementList out;
  out.conductor = conductor;
  for (int x = 0; x < conductor; ++x) {
    bool in = s.contains(x) || (added && *added == x);
    if (removed && *removed == x) in = false;
    if (in) out.members_below.push_back(x);
  }
  return out;
}

NumericalSemigroup add_special_gap(NumericalSemigroup const& s, int h) {
  if (!s.is_special_gap(h)) throw NotSpecialGap(h);
  auto list = modified_elements(s, h, std::nullopt);
  return NumericalSemigroup::from_small_elements(list.members_below, list.conductor);
}

NumericalSemigroup remove_minimal_generator(NumericalSemigroup const& s, int x) {
  if (!s.is_minimal_generator(x)) throw NotMinimalGenerator(x);
  auto list = modified_elements(s, std::nullopt, x);
  return NumericalSemigroup::from_small_elements(list.members_below, list.conductor);
}

NumericalSemigroup almost_ordinary(int g, int n) {
  if (g < 2 || n < 2 || n > g) {
    throw DomainError("almost-ordinary semigroup needs g >= 2 and 2 <= n <= g (got g=" +
                      std::to_string(g) + ", n=" + std::to_string(n) + ")");
  }
  std::vector<int> members{0};
  for (int x = g; x <= g + n - 2; ++x) members.push_back(x);
  return NumericalSemigroup::from_small_elements(members, g + n);
}

NumericalSemigroup ordinary(int c) {
  if (c < 0) throw DomainError("conductor must be nonnegative");
  if (c <= 1) return NumericalSemigroup{};
  std::vector<int> members{0};
  return NumericalSemigroup::from_small_elements(members, c);
}

bool is_ordinary(NumericalSemigroup const& s) {
  return s.is_naturals() || s.multiplicity() == s.conductor();
}

bool is_almost_ordinary(NumericalSemigroup const& s) {
  if (is_ordinary(s)) return false;
  // Members in (m, c) are the n small elements minus 0 and m.
  const int gaps_above_m = (s.conductor() - 1 - s.multiplicity()) - (s.left_count() - 2);
  return gaps_above_m == 1;
}

bool is_irreducible(NumericalSemigroup const& s) {
  if (s.is_naturals()) return false;
  auto sg = s.special_gaps();
  return sg.size() == 1 && sg.front() == s.frobenius();
}

bool is_symmetric(NumericalSemigroup const& s) {
  return is_irreducible(s) && s.frobenius() % 2 == 1;
}

bool is_pseudo_symmetric(NumericalSemigroup const& s) {
  return is_irreducible(s) && s.frobenius() % 2 == 0;
}

bool is_special(NumericalSemigroup const& s) {
  if (s.is_naturals()) return true;
  const int m = s.multiplicity();
  for (int h = s.frobenius() - 1; h > m; --h) {
    if (s.is_special_gap(h)) return false;
  }
  return true;
}

std::string special_kind(NumericalSemigroup const& s) {
  if (is_ordinary(s)) return "ordinary";
  if (is_irreducible(s)) return "irreducible";
  if (is_almost_ordinary(s)) return "almost-ordinary";
  if (is_special(s)) return "special";
  return {};
}

InvariantReport report(NumericalSemigroup const& s) {
  InvariantReport r;
  r.conductor = s.conductor();
  r.frobenius = s.frobenius();
  r.genus = s.genus();
  r.multiplicity = s.multiplicity();
  r.left = s.left_count();
  r.gaps = s.gaps();
  r.min_generators = s.minimal_generators();
  r.embedding_dimension = static_cast<int>(r.min_generators.size());
  r.special_gaps = s.special_gaps();
  if (!is_ordinary(s)) r.sub_frobenius = s.sub_frobenius();
  return r;
}

namespace {

std::string join(std::vector<int> const& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

}  // namespace

std::string to_string(NumericalSemigroup const& s) {
  if (s.is_naturals()) return "{0,->}";
  auto members = s.small_elements();
  members.push_back(s.conductor());
  return "{" + join(members) + ",->}";
}

std::string generators_string(NumericalSemigroup const& s) {
  return "<" + join(s.minimal_generators()) + ">";
}

}  // namespace numsg
