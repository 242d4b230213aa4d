#include "gamma/ring.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using gamma_m::BasisKey;
using gamma_m::Composition;
using gamma_m::Int;
using gamma_m::Partition;
using gamma_m::RingElement;

namespace {

RingElement h(const char* parts, int m) {
    return gamma_m::basis_monomial(Partition::parse(parts), Partition(), m);
}

}  // namespace

TEST_CASE("zero one and basis monomials") {
    RingElement z = RingElement::zero(3);
    CHECK(z.is_zero());
    CHECK(!z.degree());
    CHECK(gamma_m::to_text(z) == "0");

    RingElement one = RingElement::one(3);
    CHECK(!one.is_zero());
    CHECK(one.degree() == 0);
    CHECK(gamma_m::to_text(one) == "1");

    RingElement b = gamma_m::basis_monomial(Partition::parse("2,1"), Partition::parse("3"), 3);
    CHECK(b.degree() == 6);
    CHECK(gamma_m::to_text(b) == "h[2,1] e[3]");
    CHECK(gamma_m::coefficient(b, BasisKey(Partition::parse("2,1"), Partition::parse("3"), 3)) ==
          1);
    CHECK(gamma_m::coefficient(b, BasisKey(Partition::parse("3"), Partition::parse("3"), 3)) ==
          0);

    CHECK_THROWS_AS(RingElement::zero(0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_m::basis_monomial(Partition(), Partition::parse("2"), 3),
                    std::invalid_argument);
}

TEST_CASE("from_terms prunes zeros and rejects foreign keys") {
    RingElement::TermMap terms;
    terms.emplace(BasisKey(Partition::parse("1"), Partition(), 3), Int(0));
    RingElement r = RingElement::from_terms(3, std::move(terms));
    CHECK(r.is_zero());

    RingElement::TermMap bad;
    bad.emplace(BasisKey(Partition::parse("1"), Partition(), 2), Int(1));
    CHECK_THROWS_AS(RingElement::from_terms(3, std::move(bad)), std::invalid_argument);
}

TEST_CASE("ring axioms on small elements") {
    RingElement a = gamma_m::expand_e(2, 3);
    RingElement b = gamma_m::expand_e(4, 3);
    RingElement c = h("2,1", 3);

    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == RingElement::zero(3));
    CHECK(RingElement::one(3) * a == a);
    CHECK(Int(3) * a == a + a + a);
    CHECK(-(-a) == a);

    CHECK_THROWS_AS(a + RingElement::one(2), std::invalid_argument);
    CHECK_THROWS_AS(a * RingElement::one(2), std::invalid_argument);
}

TEST_CASE("degree of products and mixed sums") {
    RingElement a = h("2,1", 3);
    RingElement b = h("1", 3);
    CHECK((a * b).degree() == 4);
    CHECK(!(a + b).degree());  // inhomogeneous
}

TEST_CASE("multiplication merges h and e parts by union") {
    RingElement a = gamma_m::basis_monomial(Partition::parse("2"), Partition::parse("3"), 3);
    RingElement b = gamma_m::basis_monomial(Partition::parse("3,1"), Partition::parse("6"), 3);
    RingElement ab = a * b;
    REQUIRE(ab.terms().size() == 1);
    const BasisKey& key = ab.terms().begin()->first;
    CHECK(key.h == Partition::parse("3,2,1"));
    CHECK(key.e == Partition::parse("6,3"));
}

TEST_CASE("d coefficients") {
    CHECK(gamma_m::d_coefficient(Partition(), 3) == 1);
    CHECK(gamma_m::d_coefficient(Partition::parse("2"), 3) == -1);
    CHECK(gamma_m::d_coefficient(Partition::parse("1,1"), 3) == 1);
    CHECK(gamma_m::d_coefficient(Partition::parse("3,2,1,1"), 3) ==
          gamma_m::sign(Partition::parse("3,2,1,1")) * 3);
    // m divides the size, so no rearrangement avoids all prefix sums
    CHECK(gamma_m::d_coefficient(Partition::parse("2,1"), 3) == 0);
}

TEST_CASE("expand_e golden values at m=3") {
    CHECK(gamma_m::to_text(gamma_m::expand_e(2, 3)) == "-h[2] + h[1,1]");
    CHECK(gamma_m::to_text(gamma_m::expand_e(4, 3)) ==
          "-h[4] + h[3,1] + h[2,2] - h[2,1,1] + h[1] e[3]");
}

TEST_CASE("expand_e at divisible degrees and degree zero") {
    CHECK(gamma_m::expand_e(0, 3) == RingElement::one(3));
    CHECK(gamma_m::expand_e(3, 3) ==
          gamma_m::basis_monomial(Partition(), Partition::parse("3"), 3));
    CHECK(gamma_m::expand_e(6, 3) ==
          gamma_m::basis_monomial(Partition(), Partition::parse("6"), 3));
    CHECK(gamma_m::expand_e(2, 1) ==
          gamma_m::basis_monomial(Partition(), Partition::parse("2"), 1));
}

TEST_CASE("expand_e is homogeneous with divisible e-parts") {
    for (int m : {2, 3, 5})
        for (int n = 0; n <= 10; ++n) {
            RingElement e = gamma_m::expand_e(n, m);
            if (n > 0) CHECK(e.degree() == n);
            for (const auto& [key, coeff] : e.terms()) {
                CHECK(coeff != 0);
                for (int part : key.e.parts()) CHECK(part % m == 0);
            }
        }
}

TEST_CASE("expand_e guard") {
    CHECK_THROWS_AS(gamma_m::expand_e(51, 3), gamma_m::guard_error);
    CHECK_THROWS_AS(gamma_m::expand_e(8, 3, 7), gamma_m::guard_error);
    CHECK_THROWS_AS(gamma_m::expand_e(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(gamma_m::expand_e(2, 0), std::invalid_argument);
}

TEST_CASE("straighten golden nine-term expansion") {
    RingElement s = gamma_m::straighten_direct(Composition::parse("5"),
                                               Composition::parse("4,3,2"), 3);
    CHECK(gamma_m::to_text(s) ==
          "h[5,4,2] e[3] - h[5,4,1,1] e[3] - h[5,3,2,1] e[3] + h[5,3,1,1,1] e[3]"
          " - h[5,2,2,2] e[3] + 2 h[5,2,2,1,1] e[3] - h[5,2,1,1,1,1] e[3]"
          " - h[5,2,1] e[3,3] + h[5,1,1,1] e[3,3]");
    CHECK(gamma_m::coefficient(
              s, BasisKey(Partition::parse("5,2,2,1,1"), Partition::parse("3"), 3)) == 2);
    CHECK(gamma_m::coefficient(
              s, BasisKey(Partition::parse("5,2,1"), Partition::parse("3,3"), 3)) == -1);
}

TEST_CASE("straighten of a bare h monomial is itself") {
    RingElement s = gamma_m::straighten_direct(Composition::parse("4,2"), Composition(), 3);
    CHECK(s == h("4,2", 3));
    CHECK(gamma_m::straighten_direct(Composition(), Composition(), 3) == RingElement::one(3));
}

TEST_CASE("straighten depends only on the types of alpha and beta") {
    RingElement a = gamma_m::straighten_direct(Composition::parse("1,5"),
                                               Composition::parse("2,4,3"), 3);
    RingElement b = gamma_m::straighten_direct(Composition::parse("5,1"),
                                               Composition::parse("4,3,2"), 3);
    CHECK(a == b);
}

TEST_CASE("straighten via the product of factors agrees") {
    for (int m : {2, 3}) {
        for (int total = 0; total <= 8; ++total) {
            for (int a = 0; a <= total; ++a) {
                for (const Partition& alpha : gamma_m::partitions_of(a)) {
                    for (const Partition& beta : gamma_m::partitions_of(total - a)) {
                        INFO("m=" << m << " alpha=(" << alpha.str() << ") beta=(" << beta.str()
                                  << ")");
                        CHECK(gamma_m::straighten_direct(alpha, beta, m) ==
                              gamma_m::straighten_product(alpha, beta, m));
                    }
                }
            }
        }
    }
}

TEST_CASE("products of expansions stay inside the basis") {
    RingElement prod = gamma_m::expand_e(4, 3) * gamma_m::expand_e(2, 3) * h("2,1", 3);
    for (const auto& [key, coeff] : prod.terms())
        for (int part : key.e.parts()) CHECK(part % 3 == 0);
    CHECK(prod.degree() == 9);
}

TEST_CASE("psi swaps the generator families") {
    // psi(h_2) = e_2 expanded in the basis
    CHECK(gamma_m::psi(h("2", 3)) == gamma_m::expand_e(2, 3));
    // psi(e_2) = h_2: apply psi to the expansion of e_2
    CHECK(gamma_m::psi(gamma_m::expand_e(2, 3)) == h("2", 3));
    CHECK(gamma_m::psi(RingElement::one(3)) == RingElement::one(3));
    CHECK(gamma_m::psi(RingElement::zero(3)).is_zero());
}

TEST_CASE("psi is an involution on basis monomials") {
    for (int m : {2, 3, 5})
        for (int n = 0; n <= 8; ++n)
            for (const gamma_m::PairPartition& key : gamma_m::pairs_of_total(n, m)) {
                RingElement b = gamma_m::basis_monomial(key.h, key.e, m);
                CHECK(gamma_m::psi(gamma_m::psi(b)) == b);
            }
}

TEST_CASE("psi is multiplicative") {
    RingElement a = gamma_m::straighten_direct(Composition::parse("2"),
                                               Composition::parse("3,1"), 3);
    RingElement b = gamma_m::straighten_direct(Composition::parse("1,1"),
                                               Composition::parse("2"), 3);
    CHECK(gamma_m::psi(a * b) == gamma_m::psi(a) * gamma_m::psi(b));
}

TEST_CASE("text rendering corner cases") {
    CHECK(gamma_m::to_text(Int(2) * RingElement::one(3)) == "2");
    CHECK(gamma_m::to_text(-RingElement::one(3)) == "-1");
    CHECK(gamma_m::to_text(-h("2", 3)) == "-h[2]");
    CHECK(gamma_m::to_text(Int(-2) * h("2", 3)) == "-2 h[2]");
    CHECK(gamma_m::to_text(gamma_m::basis_monomial(Partition(), Partition::parse("3"), 3)) ==
          "e[3]");
    RingElement mixed = h("1", 3) - RingElement::one(3);
    CHECK(gamma_m::to_text(mixed) == "-1 + h[1]");
}

TEST_CASE("term order is degree then descending h then descending e") {
    RingElement s = gamma_m::expand_e(4, 3);
    std::vector<std::string> keys;
    for (const auto& [key, coeff] : s.terms()) keys.push_back(key.str());
    std::vector<std::string> expected = {"4|", "3,1|", "2,2|", "2,1,1|", "1|3"};
    CHECK(keys == expected);
}
