#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hha/linalg.hpp"
#include "hha/verma.hpp"

using namespace hha;

namespace {

const CocycleTable& hyp() {
    static CocycleTable t = CocycleTable::hyperelliptic(1, 16);
    return t;
}

const WeightFunctional& unit_phi() {
    static WeightFunctional p({Rat(1)}, Rat(1));
    return p;
}

// Independent Wick-pairing oracle for the hyperelliptic Shapovalov form on
// PBW monomials: sum over matchings of equal-value parts, each pair weighted
// by part * omega1 * phi(c).
Rat wick_oracle(std::vector<int> a, std::vector<int> b, const Rat& scale) {
    if (a.empty()) return b.empty() ? Rat(1) : Rat(0);
    const int head = a.back();
    a.pop_back();
    Rat total = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] != head) continue;
        std::vector<int> rest = b;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        total += Rat(head) * scale * wick_oracle(a, rest, scale);
    }
    return total;
}

ModuleVector random_vector(std::mt19937& rng, int max_level) {
    std::uniform_int_distribution<int> level(0, max_level);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    ModuleVector v;
    for (int t = 0; t < 3; ++t) {
        auto basis = partitions_of(level(rng), 1);
        Rat c(num(rng), den(rng));
        c.canonicalize();
        v.add_term(basis[rng() % basis.size()], c);
    }
    return v;
}

}  // namespace

TEST_CASE("vacuum and decomposition") {
    auto vac = ModuleVector::vacuum();
    CHECK(vac.coeff(Partition()) == 1);
    CHECK(vac.terms().size() == 1);
    auto dec = level_decompose(vac);
    REQUIRE(dec.size() == 1);
    CHECK(dec.at(0) == vac);
    CHECK(shapovalov(vac, vac, hyp(), unit_phi()) == 1);
}

TEST_CASE("create acts abelian and linear") {
    auto vac = ModuleVector::vacuum();
    CHECK(create(vac, 1) == ModuleVector::basis(Partition::from_parts({1})));
    CHECK(create(create(vac, 1), 1) == ModuleVector::basis(Partition::from_parts({1, 1})));
    CHECK(create(create(vac, 1), 2) == create(create(vac, 2), 1));
    ModuleVector v = Rat(3) * ModuleVector::basis(Partition::from_parts({2}));
    CHECK(create(v, 1).coeff(Partition::from_parts({2, 1})) == 3);
}

TEST_CASE("annihilate contracts with multiplicity") {
    auto vac = ModuleVector::vacuum();
    CHECK(annihilate(create(vac, 1), 1, 1, hyp(), unit_phi()) == vac);
    CHECK(annihilate(create(create(vac, 1), 1), 2, 1, hyp(), unit_phi()).is_zero());
    auto two = annihilate(create(create(vac, 1), 1), 1, 1, hyp(), unit_phi());
    CHECK(two == Rat(2) * create(vac, 1));
}

TEST_CASE("apply_word examples") {
    auto vac = ModuleVector::vacuum();
    CHECK(apply_word(vac, {{1, 1}, {-1, 1}}, hyp(), unit_phi()) == vac);
    CHECK(apply_word(vac, {{-2, 1}, {2, 1}}, hyp(), unit_phi()).is_zero());
    CHECK(apply_word(vac, {{2, 1}, {-1, 1}, {-1, 1}}, hyp(), unit_phi()).is_zero());
    // b0 acts as the scalar phi(b0)
    WeightFunctional phi({Rat(5, 2)}, Rat(1));
    CHECK(apply_word(vac, {{0, 1}}, hyp(), phi) == Rat(5, 2) * vac);
}

TEST_CASE("level-2 Gram explicit values") {
    auto g = gram_matrix(2, hyp(), unit_phi());
    REQUIRE(g.basis.size() == 2);
    CHECK(g.basis[0] == Partition::from_parts({2}));
    CHECK(g.basis[1] == Partition::from_parts({1, 1}));
    CHECK(g.entries[0][0] == 2);
    CHECK(g.entries[0][1] == 0);
    CHECK(g.entries[1][1] == 2);
}

TEST_CASE("level-3 Gram diagonal") {
    auto g = gram_matrix(3, hyp(), unit_phi());
    REQUIRE(g.basis.size() == 3);
    CHECK(g.entries[0][0] == 3);
    CHECK(g.entries[1][1] == 2);
    CHECK(g.entries[2][2] == 6);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            if (p != q) CHECK(g.entries[p][q] == 0);
}

TEST_CASE("Gram matches the Wick oracle and the z_lambda closed form") {
    for (int n = 0; n <= 8; ++n) {
        auto g = gram_matrix(n, hyp(), unit_phi());
        for (std::size_t p = 0; p < g.basis.size(); ++p)
            for (std::size_t q = 0; q < g.basis.size(); ++q) {
                std::vector<int> a = g.basis[p].parts();
                std::vector<int> b = g.basis[q].parts();
                CHECK(g.entries[p][q] == wick_oracle(a, b, 1));
            }
        for (std::size_t p = 0; p < g.basis.size(); ++p)
            CHECK(g.entries[p][p] == z_factor(g.basis[p]));
    }
}

TEST_CASE("Gram diagonal with general omega1, phi(c)") {
    auto table = CocycleTable::hyperelliptic(Rat(1, 3), 16);
    WeightFunctional phi({Rat(1)}, Rat(5, 2));
    const Rat scale = Rat(1, 3) * Rat(5, 2);
    for (int n = 0; n <= 6; ++n) {
        auto g = gram_matrix(n, table, phi);
        for (std::size_t p = 0; p < g.basis.size(); ++p) {
            // prod_i m_i! (i * omega1 * phi(c))^{m_i}
            const auto& parts = g.basis[p].parts();
            Rat want = 1;
            std::size_t i = 0;
            while (i < parts.size()) {
                std::size_t j = i;
                Rat fact = 1;
                while (j < parts.size() && parts[j] == parts[i]) {
                    ++j;
                    fact *= Rat(static_cast<int>(j - i));
                    want *= Rat(parts[i]) * scale;
                }
                want *= fact;
                i = j;
            }
            CHECK(g.entries[p][p] == want);
            CHECK(g.entries[p][p] == wick_oracle(parts, parts, scale));
        }
    }
}

TEST_CASE("gram_det values and product formula") {
    CHECK(gram_det(1, hyp(), unit_phi()) == 1);
    CHECK(gram_det(2, hyp(), unit_phi()) == 4);
    CHECK(gram_det(3, hyp(), unit_phi()) == 36);
    auto table = CocycleTable::hyperelliptic(Rat(2), 16);
    WeightFunctional phi({Rat(1)}, Rat(3));
    for (int n = 1; n <= 8; ++n) {
        Rat prod = 1;
        for (const auto& p : partitions_of(n, 1)) {
            prod *= z_factor(p);
            for (int i = 0; i < p.length(); ++i) prod *= Rat(6);  // omega1*phi(c)
        }
        CHECK(gram_det(n, table, phi) == prod);
    }
}

TEST_CASE("contravariance, symmetry, weight preservation") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> kdist(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        auto v = random_vector(rng, 6);
        auto w = random_vector(rng, 6);
        int k = kdist(rng);
        CHECK(shapovalov(create(v, k), w, hyp(), unit_phi()) ==
              shapovalov(v, annihilate(w, k, 1, hyp(), unit_phi()), hyp(), unit_phi()));
        CHECK(shapovalov(v, w, hyp(), unit_phi()) == shapovalov(w, v, hyp(), unit_phi()));
    }
    // distinct homogeneous levels pair to zero
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            if (a == b) continue;
            for (const auto& pa : partitions_of(a, 1))
                for (const auto& pb : partitions_of(b, 1))
                    CHECK(shapovalov(ModuleVector::basis(pa), ModuleVector::basis(pb),
                                     hyp(), unit_phi()) == 0);
        }
}

TEST_CASE("p-admissibility: hyperelliptic is non-degenerate") {
    auto res = is_p_admissible_up_to(8, hyp(), unit_phi());
    CHECK(res.admissible);
    CHECK(res.degenerate_level == -1);
}

TEST_CASE("p-admissibility failure reports level and kernel witness") {
    // psi_{2,-2} = 0 makes S(b_{-2}v, b_{-2}v) = 0 while cross terms between
    // partitions of different lengths vanish, so G_2 = [[0,0],[0,2]].
    auto singular = CocycleTable::from_records(1, 0, 8, {{1, 1, 1, -1, Rat(1)}});
    WeightFunctional phi({Rat(1)}, Rat(1));
    auto g2 = gram_matrix(2, singular, phi);
    REQUIRE(det_bareiss(g2.entries) == 0);
    auto res = is_p_admissible_up_to(4, singular, phi);
    CHECK(!res.admissible);
    CHECK(res.degenerate_level == 2);
    REQUIRE(res.kernel_witness.size() == g2.basis.size());
    bool nonzero = false;
    for (const auto& c : res.kernel_witness)
        if (c != 0) nonzero = true;
    CHECK(nonzero);
    for (std::size_t r = 0; r < g2.basis.size(); ++r) {
        Rat acc = 0;
        for (std::size_t c = 0; c < g2.basis.size(); ++c)
            acc += g2.entries[r][c] * res.kernel_witness[c];
        CHECK(acc == 0);
    }
}

TEST_CASE("level_decompose splits and reassembles") {
    ModuleVector v;
    v.add_term(Partition(), Rat(1));
    v.add_term(Partition::from_parts({1}), Rat(2));
    v.add_term(Partition::from_parts({2}), Rat(1));
    v.add_term(Partition::from_parts({1, 1}), Rat(-1));
    auto dec = level_decompose(v);
    REQUIRE(dec.size() == 3);
    CHECK(dec.at(0).coeff(Partition()) == 1);
    CHECK(dec.at(1).coeff(Partition::from_parts({1})) == 2);
    ModuleVector sum;
    for (const auto& [lvl, part] : dec) sum += part;
    CHECK(sum == v);
}

TEST_CASE("truncation errors propagate") {
    auto small = CocycleTable::hyperelliptic(1, 2);
    auto v = ModuleVector::basis(Partition::from_parts({3}));
    CHECK_THROWS_AS(annihilate(v, 3, 1, small, unit_phi()), TruncationError);
    CHECK_THROWS_AS(shapovalov(v, v, small, unit_phi()), TruncationError);
}

TEST_CASE("gram JSON emission round-trips") {
    auto g = gram_matrix(3, hyp(), unit_phi());
    auto s = g.to_json();
    CHECK(s.find("\"level\":3") != std::string::npos);
    CHECK(s.find("2+1") != std::string::npos);
}
