#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfh/braidword/braid.hpp"
#include "mfh/braidword/free_word.hpp"

namespace mfh {

/// Finitely presented group; relator letters index generators from 1.
class GroupPresentation {
public:
    GroupPresentation() = default;
    /// Throws std::invalid_argument if a relator uses an index beyond the
    /// generator list or names repeat.
    GroupPresentation(std::vector<std::string> generators, std::vector<FreeWord> relators);

    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<FreeWord>& relators() const { return rels_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    int num_relators() const { return static_cast<int>(rels_.size()); }
    int deficiency() const { return num_generators() - num_relators(); }
    /// 1-based index; throws std::out_of_range for unknown names.
    int index_of(const std::string& name) const;

    /// Exponent-sum matrix (relators x generators).
    std::vector<std::vector<long long>> exponent_sums() const;

    /// {"generators": [...], "relators": [[signed 1-based letters], ...]}
    std::string to_json() const;
    static GroupPresentation from_json(const std::string& text);

    bool operator==(const GroupPresentation& rhs) const { return gens_ == rhs.gens_ && rels_ == rhs.rels_; }

private:
    std::vector<std::string> gens_;
    std::vector<FreeWord> rels_;
};

/// Split extension F_n x| B. Base relators are words in the base generators.
struct SemidirectData {
    int fiber_rank = 0;
    std::vector<std::string> base_generators;
    std::vector<BraidWord> monodromy;  // one per base generator, on fiber_rank strands
    std::vector<FreeWord> base_relators;
    std::vector<std::string> fiber_names;  // default y1..yn
    std::optional<BasisChange> basis;      // fiber generators taken in these coordinates
};

/// Generators: base then fiber. One relator g^-1 x g eta(g)(x)^-1 per (base
/// generator, fiber generator) pair in that order, then the base relators.
GroupPresentation semidirect_presentation(const SemidirectData& d);

/// Same, from explicit fiber automorphisms.
GroupPresentation semidirect_presentation(const std::vector<std::string>& base_generators,
                                          const std::vector<std::string>& fiber_names,
                                          const std::vector<FreeGroupEndo>& actions,
                                          const std::vector<FreeWord>& base_relators = {});

}  // namespace mfh
