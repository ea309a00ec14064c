#include <stdexcept>

#include "doctest.h"
#include "mfh/grouppres/arrangement.hpp"

using namespace mfh;

namespace {

bool has_relator(const GroupPresentation& pr, const FreeWord& w) {
    for (const auto& r : pr.relators())
        if (r == w) return true;
    return false;
}

FreeWord gen(const GroupPresentation& pr, const std::string& name, long long e = 1) {
    return FreeWord::generator(pr.index_of(name), e);
}

bool exponent_sums_vanish(const GroupPresentation& pr) {
    for (const auto& row : pr.exponent_sums())
        for (long long x : row)
            if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("semidirect presentation of a direct product") {
    SemidirectData d;
    d.fiber_rank = 1;
    d.base_generators = {"g"};
    d.monodromy = {BraidWord(1, {})};
    GroupPresentation pr = semidirect_presentation(d);
    CHECK(pr.generators() == std::vector<std::string>{"g", "y1"});
    REQUIRE(pr.num_relators() == 1);
    CHECK(pr.relators()[0].to_signed() == std::vector<int>{-1, 2, 1, -2});
}

TEST_CASE("deconed presentation shapes") {
    for (int p : {2, 3, 5}) {
        GroupPresentation pr = build_deconed_presentation(p);
        CHECK(pr.num_generators() == 3 * p + 1);
        CHECK(pr.num_relators() == 2 * p * (p + 1));
        CHECK(exponent_sums_vanish(pr));
        GroupPresentation pre = build_prefix_deconed_presentation(p);
        CHECK(pre.num_generators() == 3 * p + 1);
        CHECK(pre.num_relators() == 2 * p * (p + 1));
        CHECK(exponent_sums_vanish(pre));
    }
    CHECK(build_deconed_presentation(2).num_generators() == 7);
    CHECK(build_deconed_presentation(2).num_relators() == 12);
    CHECK(build_deconed_presentation(3).num_relators() == 24);
}

TEST_CASE("full twist monodromy in prefix coordinates") {
    // Z1 acts as u_i -> u_p u_i u_p^-1, v_j -> v_j.
    const int p = 3;
    GroupPresentation pr = build_prefix_deconed_presentation(p);
    FreeWord g = gen(pr, "g1"), up = gen(pr, "u3");
    for (int i = 1; i <= p; ++i) {
        FreeWord u = gen(pr, "u" + std::to_string(i));
        CHECK(has_relator(pr, g.inverse() * u * g * (up * u * up.inverse()).inverse()));
        FreeWord v = gen(pr, "v" + std::to_string(i));
        CHECK(has_relator(pr, g.inverse() * v * g * v.inverse()));
    }
}

TEST_CASE("alternate presentation relators") {
    for (int p : {3, 5}) {
        GroupPresentation pr = build_alternate_deconed_presentation(p);
        CHECK(pr.num_generators() == 3 * p + 1);
        CHECK(pr.num_relators() == 2 * p * (p + 1));
        CHECK(exponent_sums_vanish(pr));
        FreeWord g1 = gen(pr, "g1"), a = gen(pr, "g12:" + std::to_string(p));
        FreeWord up = gen(pr, "u" + std::to_string(p));
        CHECK(has_relator(pr, g1.inverse() * up * g1 * up.inverse()));
        FreeWord u1 = gen(pr, "u1"), v1 = gen(pr, "v1");
        CHECK(has_relator(pr, a.inverse() * v1 * a * (u1 * v1 * u1.inverse()).inverse()));
        for (int r = 1; r <= p; ++r) {
            FreeWord u = gen(pr, "u" + std::to_string(r));
            CHECK(has_relator(pr, a.inverse() * u * a * u.inverse()));
        }
    }
    CHECK_THROWS_AS(build_alternate_deconed_presentation(2), std::invalid_argument);
}

TEST_CASE("cone presentation") {
    GroupPresentation lit = build_cone_presentation(2, false);
    CHECK(lit.num_generators() == 8);
    CHECK(lit.num_relators() == 16);
    GroupPresentation cen = build_cone_presentation(2, true);
    CHECK(cen.num_relators() == 16 + 3);
    CHECK(exponent_sums_vanish(cen));
    CHECK(cen.generators()[1] == "g2");
}

TEST_CASE("arrangement specs") {
    ArrangementSpec s3 = arrangement_spec(3);
    CHECK(s3.total_degree == 14);
    CHECK(s3.multiplicities == std::vector<long long>{1, 1, 2, 2, 2, 1, 1, 1, 1, 1, 1});
    ArrangementSpec s2 = arrangement_spec(2);
    CHECK(s2.total_degree == 15);
    CHECK(s2.multiplicities == std::vector<long long>{2, 1, 3, 3, 2, 2, 1, 1});
    CHECK(arrangement_spec(3, std::vector<long long>(11, 1)).total_degree == 11);
    CHECK(arrangement_spec(5).total_degree == 22);
    CHECK_THROWS_AS(arrangement_spec(3, std::vector<long long>(11, 2)), std::invalid_argument);
    CHECK_THROWS_AS(arrangement_spec(3, std::vector<long long>(10, 1)), std::invalid_argument);
    CHECK_THROWS_AS(arrangement_spec(4), std::invalid_argument);

    // strand k <-> H13:p+1-k, strand p+k <-> H23:p+1-k
    CHECK(s3.labels[s3.strand_hyperplane[0]] == "H13:3");
    CHECK(s3.labels[s3.strand_hyperplane[2]] == "H13:1");
    CHECK(s3.labels[s3.strand_hyperplane[3]] == "H23:3");
    CHECK(s3.labels[s3.strand_hyperplane[5]] == "H23:1");

    std::vector<long long> idx;
    for (int i = 0; i < s3.size(); ++i) idx.push_back(i);
    CHECK(s3.to_deconed(idx) == std::vector<long long>{0, 2, 3, 4, 7, 6, 5, 10, 9, 8});
    CHECK(s3.to_cone(idx) == std::vector<long long>{0, 1, 2, 3, 4, 7, 6, 5, 10, 9, 8});
    CHECK(s2.to_deconed(s2.multiplicities) == std::vector<long long>{2, 3, 3, 2, 2, 1, 1});
}

TEST_CASE("serialization round trips") {
    GroupPresentation pr = build_deconed_presentation(2);
    CHECK(GroupPresentation::from_json(pr.to_json()) == pr);
    ArrangementSpec s = arrangement_spec(3, std::vector<long long>{1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 3});
    ArrangementSpec t = ArrangementSpec::from_json(s.to_json());
    CHECK(t.multiplicities == s.multiplicities);
    CHECK(t.total_degree == s.total_degree);
    CHECK_THROWS_AS(GroupPresentation::from_json("{\"generators\":[\"a\"],\"relators\":[[2]]}"), std::invalid_argument);
    CHECK_THROWS_AS(GroupPresentation::from_json("not json"), std::invalid_argument);
}

TEST_CASE("exponent transport to other coordinates") {
    std::vector<long long> dec{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK(deconed_to_prefix(3, dec) == std::vector<long long>{1, 2, 3, 4, 5, 11, 18, 8, 9, 10});
    // t(k): equal y exponents, so u_r = 2r e, v_r = e whatever tau permutes.
    std::vector<long long> tk{1, 2, 2, 2, 1, 1, 1, 1, 1, 1};
    CHECK(deconed_to_alternate(3, tk) == std::vector<long long>{1, 2, 2, 2, 2, 4, 6, 1, 1, 1});
}
