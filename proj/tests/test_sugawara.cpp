#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hha/sugawara.hpp"

using namespace hha;

namespace {

const CocycleTable& hyp() {
    static CocycleTable t = CocycleTable::hyperelliptic(1, 12);
    return t;
}

const WeightFunctional& unit_phi() {
    static WeightFunctional p({Rat(1)}, Rat(1));
    return p;
}

}  // namespace

TEST_CASE("L0 is the level operator on the PBW basis") {
    CHECK(apply_L0(ModuleVector::vacuum(), hyp(), unit_phi()).is_zero());
    CHECK(apply_L0(ModuleVector::basis(Partition::from_parts({3, 1})), hyp(), unit_phi()) ==
          Rat(4) * ModuleVector::basis(Partition::from_parts({3, 1})));
    ModuleVector mixed = ModuleVector::vacuum() + create(ModuleVector::vacuum(), 1);
    CHECK(apply_L0(mixed, hyp(), unit_phi()) == create(ModuleVector::vacuum(), 1));
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n, 1)) {
            auto v = ModuleVector::basis(p);
            CHECK(apply_L0(v, hyp(), unit_phi()) == Rat(n) * v);
        }
}

TEST_CASE("L0 eigenvalues are normalization independent") {
    std::vector<std::pair<Rat, Rat>> scales = {
        {Rat(1, 2), Rat(3)}, {Rat(5), Rat(1, 7)}, {Rat(2, 3), Rat(2, 3)}};
    for (const auto& [w1, pc] : scales) {
        auto table = CocycleTable::hyperelliptic(w1, 12);
        WeightFunctional phi({Rat(1)}, pc);
        for (int n = 0; n <= 6; ++n)
            for (const auto& p : partitions_of(n, 1)) {
                auto v = ModuleVector::basis(p);
                CHECK(apply_L0(v, table, phi) == Rat(n) * v);
            }
    }
}

TEST_CASE("Omega spectrum") {
    auto one = ModuleVector::basis(Partition::from_parts({1}));
    CHECK(apply_Omega(one, hyp(), unit_phi()) == Rat(-2) * one);
    CHECK(apply_Omega(ModuleVector::vacuum(), hyp(), unit_phi()).is_zero());
    for (const auto& p : partitions_of(4, 1)) {
        auto v = ModuleVector::basis(p);
        CHECK(apply_Omega(v, hyp(), unit_phi()) == Rat(-20) * v);
    }
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n, 1)) {
            auto v = ModuleVector::basis(p);
            CHECK(apply_Omega(v, hyp(), unit_phi()) == omega_eigenvalue(n, 1) * v);
        }
}

TEST_CASE("Omega power examples") {
    auto two = ModuleVector::basis(Partition::from_parts({2}));
    CHECK(apply_Omega_power(two, 2, hyp(), unit_phi()) == Rat(36) * two);
    auto one = ModuleVector::basis(Partition::from_parts({1}));
    CHECK(apply_Omega_power(one, 3, hyp(), unit_phi()) == Rat(-8) * one);
    CHECK(apply_Omega_power(ModuleVector::vacuum(), 5, hyp(), unit_phi()).is_zero());
}

TEST_CASE("tower coherence on random vectors") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> level(0, 6);
    std::uniform_int_distribution<int> num(-7, 7);
    for (int trial = 0; trial < 25; ++trial) {
        ModuleVector v;
        for (int t = 0; t < 3; ++t) {
            auto basis = partitions_of(level(rng), 1);
            v.add_term(basis[rng() % basis.size()], Rat(num(rng)));
        }
        for (int r = 1; r <= 4; ++r) {
            ModuleVector iter = v;
            for (int i = 0; i < r; ++i) iter = apply_Omega(iter, hyp(), unit_phi());
            CHECK(apply_Omega_power(v, r, hyp(), unit_phi()) == iter);
        }
    }
}

TEST_CASE("omega_eigenvalue closed form") {
    CHECK(omega_eigenvalue(3, 1) == -12);
    CHECK(omega_eigenvalue(0, 7) == 0);
    CHECK(omega_eigenvalue(2, 2) == 36);
    CHECK(omega_eigenvalue(5, 0) == 1);
}

TEST_CASE("non-hyperelliptic tables are rejected") {
    auto multi = CocycleTable::from_records(2, 0, 4, {{1, 1, 1, -1, Rat(1)},
                                                      {2, 2, 1, -1, Rat(1)}});
    WeightFunctional phi({Rat(1), Rat(1)}, Rat(1));
    CHECK_THROWS_AS(apply_L0(ModuleVector::vacuum(), multi, phi), std::invalid_argument);
    auto banded = CocycleTable::from_records(1, 1, 4, {{1, 1, 1, -1, Rat(1)}});
    CHECK_THROWS_AS(apply_L0(ModuleVector::vacuum(), banded, unit_phi()),
                    std::invalid_argument);
}
