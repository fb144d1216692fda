#include "powcay/group.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace powcay {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kNoIdentity: return "NoIdentity";
    case ErrorCode::kNotAssociative: return "NotAssociative";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kMalformedEncoding: return "MalformedEncoding";
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kIdentityInConnectionSet: return "IdentityInConnectionSet";
    case ErrorCode::kNotInverseClosed: return "NotInverseClosed";
    case ErrorCode::kSearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::kInconsistentRow: return "InconsistentRow";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table,
                                    std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::kInvalidOrder, "empty multiplication table");

  FiniteGroup group;
  group.order_ = n;
  group.table_.reserve(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(table[g].size()) != n) {
      throw Error(ErrorCode::kNotClosed, "row " + std::to_string(g) + " has " +
                                             std::to_string(table[g].size()) + " entries, expected " +
                                             std::to_string(n));
    }
    for (int h = 0; h < n; ++h) {
      const Element x = table[g][h];
      if (x < 0 || x >= n) {
        throw Error(ErrorCode::kNotClosed, "entry [" + std::to_string(g) + "][" + std::to_string(h) +
                                               "] = " + std::to_string(x) + " out of range");
      }
      group.table_.push_back(x);
    }
  }
  const auto at = [&](Element a, Element b) { return group.table_[static_cast<std::size_t>(a) * n + b]; };

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g) ok = at(e, g) == g && at(g, e) == g;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::kNoIdentity, "no two-sided identity in table");
  group.identity_ = *identity;

  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      if (seen[at(r, c)]++) throw Error(ErrorCode::kNotInvertible, "row " + std::to_string(r) + " repeats " + std::to_string(at(r, c)));
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      if (seen[at(r, c)]++) throw Error(ErrorCode::kNotInvertible, "column " + std::to_string(c) + " repeats " + std::to_string(at(r, c)));
    }
  }

  group.inverses_.assign(n, 0);
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      if (at(g, h) == group.identity_) {
        group.inverses_[g] = h;
        break;
      }
    }
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (int g = 0; g < n; ++g) labels.push_back(std::to_string(g));
  } else if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kInvalidOrder, "label count does not match order");
  }
  group.labels_ = std::move(labels);

  if (n <= kEagerAssociativityBound) group.verify_associativity();
  return group;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> rows(order_);
  for (int g = 0; g < order_; ++g) {
    rows[g].assign(table_.begin() + static_cast<std::ptrdiff_t>(g) * order_,
                   table_.begin() + static_cast<std::ptrdiff_t>(g + 1) * order_);
  }
  return rows;
}

void FiniteGroup::verify_associativity() const {
  const int n = order_;
  const auto at = [&](Element a, Element b) { return table_[static_cast<std::size_t>(a) * n + b]; };
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = at(a, b);
      for (Element c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw Error(ErrorCode::kNotAssociative, "(" + std::to_string(a) + ", " + std::to_string(b) +
                                                      ", " + std::to_string(c) + ")");
        }
      }
    }
  }
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

namespace {

using Table = std::vector<std::vector<Element>>;

Table square_table(int n) { return Table(n, std::vector<Element>(n)); }

std::string power_label(const std::string& base, int exponent) {
  if (exponent == 1) return base;
  return base + "^" + std::to_string(exponent);
}

std::vector<std::vector<int>> permutations_of(int k, bool even_only) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) inversions += p[i] > p[j];
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string cycle_label(const std::vector<int>& p) {
  std::string s;
  std::vector<char> done(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    s += '(';
    for (std::size_t j = i; !done[j]; j = p[j]) {
      if (s.back() != '(') s += ' ';
      s += std::to_string(j);
      done[j] = 1;
    }
    s += ')';
  }
  return s.empty() ? "e" : s;
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& perms) {
  const int n = static_cast<int>(perms.size());
  Table t = square_table(n);
  std::vector<int> composed(perms.front().size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < composed.size(); ++x) composed[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), composed) - perms.begin());
    }
  }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_label(p));
  return FiniteGroup::from_table(t, std::move(labels));
}

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidOrder, "cyclic group needs n >= 1");
  Table t = square_table(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(t);
}

FiniteGroup dihedral(int m) {
  if (m < 2) throw Error(ErrorCode::kInvalidOrder, "dihedral group needs m >= 2");
  const int n = 2 * m;
  Table t = square_table(n);
  for (int x = 0; x < n; ++x) {
    const int i = x % m, j = x / m;
    for (int y = 0; y < n; ++y) {
      const int k = y % m, l = y / m;
      const int rot = ((j == 0 ? i + k : i - k) % m + m) % m;
      t[x][y] = ((j + l) % 2) * m + rot;
    }
  }
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    const int i = x % m, j = x / m;
    std::string s = i == 0 ? "" : power_label("r", i);
    if (j) s += "s";
    labels.push_back(s.empty() ? "e" : s);
  }
  return FiniteGroup::from_table(t, std::move(labels));
}

FiniteGroup symmetric(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidOrder, "symmetric group needs k >= 1");
  return permutation_group(permutations_of(k, false));
}

FiniteGroup alternating(int k) {
  if (k < 3) throw Error(ErrorCode::kInvalidOrder, "alternating group needs k >= 3");
  return permutation_group(permutations_of(k, true));
}

FiniteGroup dicyclic(int m) {
  if (m < 2) throw Error(ErrorCode::kInvalidOrder, "dicyclic group needs m >= 2");
  const int rot = 2 * m, n = 4 * m;
  Table t = square_table(n);
  for (int x = 0; x < n; ++x) {
    const int i = x % rot, j = x / rot;
    for (int y = 0; y < n; ++y) {
      const int k = y % rot, l = y / rot;
      if (j == 0) {
        t[x][y] = l * rot + (i + k) % rot;
      } else if (l == 0) {
        // a^i x a^k = a^(i-k) x
        t[x][y] = rot + ((i - k) % rot + rot) % rot;
      } else {
        // a^i x a^k x = a^(i-k) x^2 = a^(i-k+m)
        t[x][y] = ((i - k + m) % rot + rot) % rot;
      }
    }
  }
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    const int i = x % rot, j = x / rot;
    std::string s = i == 0 ? "" : power_label("a", i);
    if (j) s += "x";
    labels.push_back(s.empty() ? "e" : s);
  }
  return FiniteGroup::from_table(t, std::move(labels));
}

FiniteGroup quaternion() {
  const FiniteGroup q = dicyclic(2);
  return FiniteGroup::from_table(q.table(), {"1", "i", "-1", "-i", "j", "k", "-j", "-k"});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  Table t = square_table(n);
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t[x][y] = g.multiply(x / nh, y / nh) * nh + h.multiply(x % nh, y % nh);
    }
    labels.push_back("(" + g.label(x / nh) + "," + h.label(x % nh) + ")");
  }
  return FiniteGroup::from_table(t, std::move(labels));
}

Element power(const FiniteGroup& group, Element g, long long m) {
  group.check_element(g);
  if (m < 0) throw Error(ErrorCode::kInvalidOrder, "negative exponent");
  Element result = group.identity();
  Element base = g;
  while (m > 0) {
    if (m & 1) result = group.multiply(result, base);
    base = group.multiply(base, base);
    m >>= 1;
  }
  return result;
}

int element_order(const FiniteGroup& group, Element g) {
  group.check_element(g);
  int m = 1;
  for (Element x = g; x != group.identity(); x = group.multiply(x, g)) ++m;
  return m;
}

std::vector<Element> cyclic_subgroup(const FiniteGroup& group, Element g) {
  group.check_element(g);
  std::vector<Element> powers{g};
  while (powers.back() != group.identity()) powers.push_back(group.multiply(powers.back(), g));
  return powers;
}

bool is_cyclic(const FiniteGroup& group) {
  for (Element g = 0; g < group.order(); ++g) {
    if (element_order(group, g) == group.order()) return true;
  }
  return false;
}

std::optional<int> p_group_prime(const FiniteGroup& group) {
  int n = group.order();
  if (n == 1) return 1;
  int p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

bool is_cyclic_p_group(const FiniteGroup& group) { return is_p_group(group) && is_cyclic(group); }

std::vector<int> element_order_profile(const FiniteGroup& group) {
  std::vector<int> orders;
  for (Element g = 0; g < group.order(); ++g) orders.push_back(element_order(group, g));
  std::sort(orders.begin(), orders.end());
  return orders;
}

void write_table(std::ostream& out, const FiniteGroup& group) {
  const int n = group.order();
  out << n << '\n';
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      if (h) out << ' ';
      out << group.multiply(g, h);
    }
    out << '\n';
  }
}

FiniteGroup read_table(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1) throw Error(ErrorCode::kInvalidOrder, "missing or invalid order line");
  if (n > 4096) throw Error(ErrorCode::kInvalidOrder, "order " + std::to_string(n) + " too large for a table file");
  Table t = square_table(static_cast<int>(n));
  for (auto& row : t) {
    for (auto& x : row) {
      long long v = 0;
      if (!(in >> v)) throw Error(ErrorCode::kNotClosed, "table truncated");
      if (v < 0 || v >= n) throw Error(ErrorCode::kNotClosed, "entry " + std::to_string(v) + " out of range");
      x = static_cast<Element>(v);
    }
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorCode::kNotClosed, "trailing data after table");
  return FiniteGroup::from_table(t);
}

}  // namespace powcay
