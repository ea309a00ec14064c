#include "mfh/grouppres/presentation.hpp"

#include <set>
#include <stdexcept>

#include "json.hpp"

namespace mfh {

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<FreeWord> relators)
    : gens_(std::move(generators)), rels_(std::move(relators)) {
    std::set<std::string> seen(gens_.begin(), gens_.end());
    if (seen.size() != gens_.size()) throw std::invalid_argument("repeated generator name");
    for (const auto& r : rels_)
        if (r.max_index() > num_generators())
            throw std::invalid_argument("relator uses generator " + std::to_string(r.max_index()) + " of " +
                                        std::to_string(num_generators()));
}

int GroupPresentation::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) return static_cast<int>(i) + 1;
    throw std::out_of_range("unknown generator " + name);
}

std::vector<std::vector<long long>> GroupPresentation::exponent_sums() const {
    std::vector<std::vector<long long>> m(rels_.size(), std::vector<long long>(gens_.size(), 0));
    for (std::size_t r = 0; r < rels_.size(); ++r)
        for (const auto& [i, e] : rels_[r].letters()) m[r][i - 1] += e;
    return m;
}

std::string GroupPresentation::to_json() const {
    nlohmann::json j;
    j["generators"] = gens_;
    j["relators"] = nlohmann::json::array();
    for (const auto& r : rels_) j["relators"].push_back(r.to_signed());
    return j.dump(1);
}

GroupPresentation GroupPresentation::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("presentation is not valid JSON: ") + e.what());
    }
    if (!j.contains("generators") || !j.contains("relators"))
        throw std::invalid_argument("presentation needs 'generators' and 'relators'");
    std::vector<std::string> gens = j["generators"].get<std::vector<std::string>>();
    std::vector<FreeWord> rels;
    for (const auto& r : j["relators"]) rels.push_back(FreeWord::from_signed(r.get<std::vector<int>>()));
    return GroupPresentation(std::move(gens), std::move(rels));
}

GroupPresentation semidirect_presentation(const std::vector<std::string>& base_generators,
                                          const std::vector<std::string>& fiber_names,
                                          const std::vector<FreeGroupEndo>& actions,
                                          const std::vector<FreeWord>& base_relators) {
    if (actions.size() != base_generators.size()) throw std::invalid_argument("one action per base generator");
    const int b = static_cast<int>(base_generators.size());
    const int n = static_cast<int>(fiber_names.size());
    std::vector<std::string> gens = base_generators;
    gens.insert(gens.end(), fiber_names.begin(), fiber_names.end());

    auto shift = [b](const FreeWord& w) {
        std::vector<FreeWord::Letter> l = w.letters();
        for (auto& x : l) x.first += b;
        return FreeWord(l);
    };

    std::vector<FreeWord> rels;
    for (int g = 0; g < b; ++g) {
        if (actions[g].rank() != n) throw std::invalid_argument("action rank differs from fiber rank");
        const FreeWord gw = FreeWord::generator(g + 1);
        for (int i = 1; i <= n; ++i) {
            const FreeWord x = FreeWord::generator(b + i);
            rels.push_back(gw.inverse() * x * gw * shift(actions[g].image(i)).inverse());
        }
    }
    for (const auto& r : base_relators) {
        if (r.max_index() > b) throw std::invalid_argument("base relator uses a fiber generator");
        rels.push_back(r);
    }
    return GroupPresentation(std::move(gens), std::move(rels));
}

GroupPresentation semidirect_presentation(const SemidirectData& d) {
    if (d.monodromy.size() != d.base_generators.size())
        throw std::invalid_argument("one monodromy braid per base generator");
    std::vector<std::string> fiber = d.fiber_names;
    if (fiber.empty())
        for (int i = 1; i <= d.fiber_rank; ++i) fiber.push_back("y" + std::to_string(i));
    if (static_cast<int>(fiber.size()) != d.fiber_rank) throw std::invalid_argument("fiber name count");
    std::vector<FreeGroupEndo> actions;
    for (const auto& b : d.monodromy) {
        if (b.strands() != d.fiber_rank) throw std::invalid_argument("monodromy braid on wrong strand count");
        FreeGroupEndo e = artin_automorphism(b);
        actions.push_back(d.basis ? d.basis->in_new(e) : e);
    }
    return semidirect_presentation(d.base_generators, fiber, actions, d.base_relators);
}

}  // namespace mfh
