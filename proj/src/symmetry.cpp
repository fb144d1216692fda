#include "powcay/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace powcay {

std::string_view to_string(NotCayleyReason reason) {
  switch (reason) {
    case NotCayleyReason::kNotRegularDegree: return "NotRegularDegree";
    case NotCayleyReason::kNotVertexTransitive: return "NotVertexTransitive";
    case NotCayleyReason::kNoRegularSubgroup: return "NoRegularSubgroup";
  }
  return "Unknown";
}

namespace {

// Colour refinement: start from (in, out) degree and split classes by the
// multiset of neighbour colours until stable. Colours are numbered by sorted
// signature, so the partition is invariant under every automorphism.
std::vector<int> refined_colors(const BitMatrix& m) {
  const int n = m.size();
  std::vector<int> colors(n, 0);
  int classes = 1;
  while (true) {
    std::vector<std::vector<int>> signatures(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> out, in;
      for (int u = 0; u < n; ++u) {
        if (m.test(v, u)) out.push_back(colors[u]);
        if (m.test(u, v)) in.push_back(colors[u]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      auto& sig = signatures[v];
      sig.push_back(colors[v]);
      sig.push_back(static_cast<int>(out.size()));
      sig.insert(sig.end(), out.begin(), out.end());
      sig.push_back(static_cast<int>(in.size()));
      sig.insert(sig.end(), in.begin(), in.end());
    }
    std::map<std::vector<int>, int> numbering;
    for (const auto& sig : signatures) numbering.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, id] : numbering) id = next++;
    for (int v = 0; v < n; ++v) colors[v] = numbering[signatures[v]];
    if (next == classes) return colors;
    classes = next;
  }
}

// Backtracking over vertex images. Vertices are fixed in a connectivity-first
// order starting with vertex 0, and a candidate image must share the refined
// colour and agree on every arc to or from already placed vertices.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const BitMatrix& m) : m_(m), n_(m.size()), colors_(refined_colors(m)) {
    std::vector<char> placed(n_, 0);
    order_.push_back(0);
    placed[0] = 1;
    std::vector<int> class_size(n_, 0);
    for (int c : colors_) ++class_size[c];
    while (static_cast<int>(order_.size()) < n_) {
      int best = -1, best_links = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : order_) links += m_.test(u, v) || m_.test(v, u);
        if (links > best_links ||
            (links == best_links && class_size[colors_[v]] < class_size[colors_[best]])) {
          best = v;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed[best] = 1;
    }
  }

  const std::vector<int>& colors() const { return colors_; }

  // Calls visit(image) for every automorphism (with 0 -> first_image when
  // given); visit returns false to stop. Returns false if stopped early.
  template <class Visit>
  bool run(std::optional<int> first_image, Visit&& visit) {
    image_.assign(n_, -1);
    used_.assign(n_, 0);
    first_image_ = first_image;
    return extend(0, visit);
  }

 private:
  template <class Visit>
  bool extend(int depth, Visit& visit) {
    if (depth == n_) return visit(image_);
    const int u = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if (depth == 0 && first_image_ && w != *first_image_) continue;
      if (used_[w] || colors_[w] != colors_[u]) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        const int p = order_[k], q = image_[p];
        ok = m_.test(u, p) == m_.test(w, q) && m_.test(p, u) == m_.test(q, w);
      }
      if (!ok) continue;
      image_[u] = w;
      used_[w] = 1;
      const bool keep_going = extend(depth + 1, visit);
      used_[w] = 0;
      image_[u] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  const BitMatrix& m_;
  int n_;
  std::vector<int> colors_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::optional<int> first_image_;
};

void check_search_order(int n, const SearchLimits& limits) {
  if (n > limits.max_automorphism_order) {
    throw Error(ErrorCode::kSearchBoundExceeded, "order " + std::to_string(n) + " exceeds automorphism bound " +
                                                     std::to_string(limits.max_automorphism_order));
  }
}

std::vector<Permutation> all_automorphisms(const BitMatrix& m, const SearchLimits& limits) {
  check_search_order(m.size(), limits);
  std::vector<Permutation> out;
  AutomorphismSearch search(m);
  search.run(std::nullopt, [&](const std::vector<int>& image) {
    if (out.size() >= limits.max_automorphisms) {
      throw Error(ErrorCode::kSearchBoundExceeded,
                  "more than " + std::to_string(limits.max_automorphisms) + " automorphisms");
    }
    out.emplace_back(image);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool vertex_transitive(const BitMatrix& m, const SearchLimits& limits) {
  const int n = m.size();
  check_search_order(n, limits);
  AutomorphismSearch search(m);
  const auto& colors = search.colors();
  for (int v = 1; v < n; ++v) {
    if (colors[v] != colors[0]) return false;
  }
  // The orbit of 0 is built up from found automorphisms; each hit also marks
  // every image of 0 under its powers.
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  for (int v = 1; v < n; ++v) {
    if (reached[v]) continue;
    std::optional<Permutation> hit;
    search.run(v, [&](const std::vector<int>& image) {
      hit.emplace(image);
      return false;
    });
    if (!hit) return false;
    for (int x = (*hit)(0); !reached[x]; x = (*hit)(x)) reached[x] = 1;
  }
  return true;
}

bool is_complete_or_empty(const BitMatrix& m) {
  const int n = m.size();
  int total = 0;
  for (int v = 0; v < n; ++v) total += m.row_count(v);
  return total == 0 || total == n * (n - 1);
}

CayleyWitness cyclic_witness(const BitMatrix& m, bool directed) {
  const int n = m.size();
  FiniteGroup group = cyclic(n);
  std::vector<Element> members;
  for (int v = 1; v < n; ++v)
    if (m.test(0, v)) members.push_back(v);
  std::vector<Permutation> vertex_map;
  for (Element g = 0; g < n; ++g) vertex_map.push_back(left_translation(group, g));
  ConnectionSet connection(group, std::move(members));
  return CayleyWitness{std::move(group), std::move(connection), std::move(vertex_map), directed};
}

CayleyWitness witness_from_subgroup(const BitMatrix& m, std::vector<Permutation> regular, bool directed) {
  const int n = m.size();
  // Element g is the permutation sending 0 to g, and g*k = sigma_g(sigma_k(0)) = sigma_g(k).
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (int g = 0; g < n; ++g) {
    for (int k = 0; k < n; ++k) table[g][k] = regular[g](k);
    labels.push_back(regular[g].is_identity() ? "e" : regular[g].to_cycles());
  }
  FiniteGroup group = FiniteGroup::from_table(table, std::move(labels));
  std::vector<Element> members;
  for (int v = 0; v < n; ++v)
    if (m.test(0, v)) members.push_back(v);
  ConnectionSet connection(group, std::move(members));
  return CayleyWitness{std::move(group), std::move(connection), std::move(regular), directed};
}

CayleyVerdict decide_cayley(const BitMatrix& m, bool regular_degrees, bool directed, const SearchLimits& limits) {
  if (!regular_degrees) return NotCayley{NotCayleyReason::kNotRegularDegree};
  if (limits.trivial_graph_fast_path && is_complete_or_empty(m)) return cyclic_witness(m, directed);
  if (!vertex_transitive(m, limits)) return NotCayley{NotCayleyReason::kNotVertexTransitive};
  if (m.size() > limits.max_cayley_order) {
    throw Error(ErrorCode::kSearchBoundExceeded, "order " + std::to_string(m.size()) + " exceeds Cayley search bound " +
                                                     std::to_string(limits.max_cayley_order));
  }
  const auto auts = all_automorphisms(m, limits);
  auto regular = find_regular_subgroup(auts, m.size());
  if (!regular) return NotCayley{NotCayleyReason::kNoRegularSubgroup};
  return witness_from_subgroup(m, std::move(*regular), directed);
}

using Slots = std::vector<std::optional<Permutation>>;

// Every non-identity element of a regular group moves all points and has all
// cycles of one length.
bool is_semiregular(const Permutation& p) {
  const int n = p.degree();
  int cycle_length = 0;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = 1;
      ++length;
    }
    if (cycle_length == 0) cycle_length = length;
    if (length != cycle_length) return false;
  }
  return cycle_length > 1 || n == 1;
}

// Adds `generator` and closes under products. Fails as soon as two distinct
// elements send 0 to the same vertex, i.e. the stabilizer of 0 is nontrivial.
bool close_under_products(Slots& slots, const Permutation& generator) {
  const int n = static_cast<int>(slots.size());
  auto place = [&](const Permutation& p, std::vector<int>& queue) {
    auto& slot = slots[p(0)];
    if (!slot) {
      if (!is_semiregular(p)) return false;
      slot = p;
      queue.push_back(p(0));
      return true;
    }
    return *slot == p;
  };
  std::vector<int> queue;
  if (!place(generator, queue)) return false;
  while (!queue.empty()) {
    const Permutation x = *slots[queue.back()];
    queue.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!slots[v]) continue;
      const Permutation y = *slots[v];
      if (!place(x * y, queue) || !place(y * x, queue)) return false;
    }
  }
  return true;
}

bool search_regular(Slots& slots, const std::vector<std::vector<const Permutation*>>& by_image) {
  const int n = static_cast<int>(slots.size());
  int v = 0;
  while (v < n && slots[v]) ++v;
  if (v == n) return true;
  for (const Permutation* candidate : by_image[v]) {
    Slots trial = slots;
    if (close_under_products(trial, *candidate) && search_regular(trial, by_image)) {
      slots = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Permutation> automorphisms(const SimpleGraph& graph, const SearchLimits& limits) {
  return all_automorphisms(graph.matrix(), limits);
}

std::vector<Permutation> automorphisms(const Digraph& graph, const SearchLimits& limits) {
  return all_automorphisms(graph.matrix(), limits);
}

std::optional<Permutation> find_automorphism(const Digraph& graph, Vertex from, Vertex to,
                                             const SearchLimits& limits) {
  graph.check_vertex(from);
  graph.check_vertex(to);
  check_search_order(graph.order(), limits);
  // Relabel so that `from` becomes vertex 0, search, then undo the relabel.
  const int n = graph.order();
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[from]);
  BitMatrix m(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) m.set(u, v, graph.matrix().test(relabel[u], relabel[v]));
  AutomorphismSearch search(m);
  std::optional<Permutation> hit;
  search.run(relabel[to], [&](const std::vector<int>& image) {
    std::vector<int> original(n);
    for (int u = 0; u < n; ++u) original[relabel[u]] = relabel[image[u]];
    hit.emplace(std::move(original));
    return false;
  });
  return hit;
}

bool is_vertex_transitive(const SimpleGraph& graph, const SearchLimits& limits) {
  return vertex_transitive(graph.matrix(), limits);
}

bool is_vertex_transitive(const Digraph& graph, const SearchLimits& limits) {
  return vertex_transitive(graph.matrix(), limits);
}

std::optional<std::vector<Permutation>> find_regular_subgroup(std::span<const Permutation> auts, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidOrder, "regular subgroup search needs n >= 1");
  std::vector<std::vector<const Permutation*>> by_image(n);
  for (const auto& p : auts) {
    if (p.degree() != n) throw Error(ErrorCode::kInvalidSpec, "automorphism of wrong degree");
    if (p(0) != 0 && is_semiregular(p)) by_image[p(0)].push_back(&p);
  }
  Slots slots(n);
  slots[0] = Permutation::identity(n);
  if (!search_regular(slots, by_image)) return std::nullopt;
  std::vector<Permutation> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

CayleyVerdict is_cayley(const SimpleGraph& graph, const SearchLimits& limits) {
  return decide_cayley(graph.matrix(), is_regular(graph), false, limits);
}

CayleyVerdict is_cayley(const Digraph& graph, const SearchLimits& limits) {
  return decide_cayley(graph.matrix(), has_constant_in_out_degrees(graph), true, limits);
}

Digraph reconstruct_directed(const CayleyWitness& witness) {
  const Digraph on_elements = directed_cayley(witness.group, witness.connection);
  Digraph out(on_elements.order());
  for (Element g = 0; g < out.order(); ++g)
    for (Element h = 0; h < out.order(); ++h)
      if (on_elements.matrix().test(g, h)) out.set_arc(witness.vertex_of(g), witness.vertex_of(h));
  return out;
}

SimpleGraph reconstruct_undirected(const CayleyWitness& witness) {
  const SimpleGraph on_elements = undirected_cayley(witness.group, witness.connection);
  SimpleGraph out(on_elements.order());
  for (Element g = 0; g < out.order(); ++g)
    for (Element h = g + 1; h < out.order(); ++h)
      if (on_elements.matrix().test(g, h)) out.set_edge(witness.vertex_of(g), witness.vertex_of(h));
  return out;
}

}  // namespace powcay
