#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include <gprod/cocycle_lab.hpp>
#include <gprod/splitting.hpp>

// Slow, independent reference implementations used only by the tests.
namespace gprod::oracles {

using Word = std::vector<Syllable>;

/// Result of exploring every rewriting sequence from a word with the moves
///   delete an identity syllable,
///   merge two adjacent syllables on the same vertex,
///   swap two adjacent syllables on adjacent vertices.
struct RewriteClosure {
  std::size_t reachable = 0;
  /// Words whose swap class admits no delete or merge move.
  std::set<Word> terminal;
  /// All terminal words have one length and form one swap class.
  bool confluent = true;
  /// Lexicographically least terminal word by (vertex, element) sequence.
  Word canonical;
};

RewriteClosure rewrite_closure(const GraphProduct& product, const Word& word);

/// All words of 1..max_syllables syllables with the given exponents; for
/// finite cyclic groups the exponents are reduced and identity letters skipped.
std::vector<Word> all_words(const GraphProduct& product, std::size_t max_syllables,
                            const std::vector<Element>& exponents);

/// Inclusion-maximal cliques by subset enumeration.
std::set<VertexSet> brute_force_cliques(const SimplicialGraph& graph);

/// A ⊔ B = part, both non-empty, A ⊆ link(B); by enumeration of 2-partitions.
bool brute_force_reducible(const SimplicialGraph& graph, VertexSet part);

/// Word length in a vertex group by BFS over its Cayley graph.
std::map<Element, std::size_t> cayley_lengths(const VertexGroup& group, std::size_t radius);

/// β by the recursion β(xs) = β(x) + τ(x)(b_v(s)χ_{G_st(v)}), accumulated
/// syllable by syllable with an explicitly tracked π. Any reduced word works.
LpVector recursive_beta(const ProductAction& action, std::span<const Syllable> word);

/// Distance-profile tables φ'_v(w) = (d_{W_v}(w, k))_{k} for every kernel
/// element w occurring over the sample, with the bounds they satisfy:
/// Lipschitz constant N^{1/p} (N the number of reference points) and ρ(n) = n.
struct ProfileTables {
  std::vector<KernelTable> tables;
  DeclaredBounds bounds;
};

ProfileTables distance_profile_tables(const GraphProduct& product,
                                      const std::vector<NormalForm>& sample, double p);

}  // namespace gprod::oracles
