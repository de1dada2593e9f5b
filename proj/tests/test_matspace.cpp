#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matslocc/matrix_space.hpp"
#include "matslocc/rank.hpp"
#include "matslocc/rng.hpp"

using namespace matslocc;

namespace {

Matrix random_matrix(std::size_t m, std::size_t n, RngStream& rng) {
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long re = static_cast<long>(rng.uniform_below(7)) - 3;
            long im = static_cast<long>(rng.uniform_below(7)) - 3;
            a.at(i, j) = GaussianRational(re, im);
        }
    return a;
}

Matrix skew_generator(std::size_t d, std::size_t i, std::size_t j) {
    return Matrix::elementary(d, d, i, j) - Matrix::elementary(d, d, j, i);
}

} // namespace

TEST_CASE("kronecker basics") {
    CHECK(kronecker(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));

    Matrix a = Matrix::elementary(2, 2, 0, 0);  // rank 1
    Matrix b = Matrix::identity(2);             // rank 2
    CHECK(rank_exact(kronecker(a, b)) == 2);

    Matrix e = skew_generator(3, 0, 1);
    CHECK(rank_exact(kronecker(e, e)) == 4);
}

TEST_CASE("kronecker rank multiplicativity on random matrices") {
    RngStream rng(11, 0);
    for (int it = 0; it < 20; ++it) {
        std::size_t m1 = 1 + rng.uniform_below(4), n1 = 1 + rng.uniform_below(4);
        std::size_t m2 = 1 + rng.uniform_below(4), n2 = 1 + rng.uniform_below(4);
        Matrix a = random_matrix(m1, n1, rng), b = random_matrix(m2, n2, rng);
        CHECK(rank_exact(kronecker(a, b)) == rank_exact(a) * rank_exact(b));
    }
}

TEST_CASE("tensor of spaces multiplies dimensions") {
    MatrixSpace id3 = span_identity(3);
    MatrixSpace t = tensor(id3, id3);
    CHECK(t.dim() == 1);
    CHECK(t.canonical_basis()[0] == Matrix::identity(9));

    MatrixSpace sk = skew_space(3);
    CHECK(tensor(sk, sk).dim() == 9);

    RngStream rng(5, 0);
    for (int it = 0; it < 5; ++it) {
        std::vector<Matrix> g1, g2;
        for (int k = 0; k < 2; ++k) g1.push_back(random_matrix(2, 3, rng));
        for (int k = 0; k < 3; ++k) g2.push_back(random_matrix(3, 2, rng));
        MatrixSpace s1(2, 3, g1), s2(3, 2, g2);
        CHECK(tensor(s1, s2).dim() == s1.dim() * s2.dim());
    }
}

TEST_CASE("tensor_power") {
    MatrixSpace sk = skew_space(3);
    CHECK(tensor_power(sk, 1).dim() == sk.dim());
    MatrixSpace sq = tensor_power(sk, 2);
    CHECK(sq.rows() == 9);
    CHECK(sq.dim() == 9);
    CHECK_THROWS_AS(tensor_power(sk, 20), SizeGuardExceeded);
    CHECK_THROWS_AS(tensor_power(sk, 3, 100), SizeGuardExceeded);
}

TEST_CASE("image and kernel") {
    // span{|0><0|, |1><1|} in M(2)
    MatrixSpace diag(2, 2, {Matrix::elementary(2, 2, 0, 0), Matrix::elementary(2, 2, 1, 1)});
    CHECK(image(diag).dim() == 2);
    CHECK(kernel(diag).dim() == 0);

    MatrixSpace e00(2, 2, {Matrix::elementary(2, 2, 0, 0)});
    CHECK(image(e00).dim() == 1);
    Subspace k = kernel(e00);
    CHECK(k.dim() == 1);
    std::vector<GaussianRational> e1 = {GaussianRational(0), GaussianRational(1)};
    CHECK(k.contains(e1));

    CHECK(kernel(span_identity(4)).dim() == 0);

    MatrixSpace zero(2, 2, {Matrix(2, 2)});
    CHECK(image(zero).dim() == 0);
}

TEST_CASE("image and kernel do not depend on the generating set") {
    RngStream rng(17, 0);
    std::vector<Matrix> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_matrix(4, 4, rng));
    MatrixSpace s(4, 4, gens);
    // same span, redundant and recombined generators
    std::vector<Matrix> gens2 = gens;
    gens2.push_back(gens[0] + gens[1]);
    gens2.push_back(GaussianRational(3) * gens[2]);
    MatrixSpace s2(4, 4, gens2);
    CHECK(image(s).basis == image(s2).basis);
    CHECK(kernel(s).basis == kernel(s2).basis);
}

TEST_CASE("equivalent_transform") {
    MatrixSpace sk = skew_space(3);
    MatrixSpace same = equivalent_transform(sk, Matrix::identity(3), Matrix::identity(3));
    CHECK(same.basis_rref().rows == sk.basis_rref().rows);

    Matrix singular(3, 3);
    CHECK_THROWS_AS(equivalent_transform(sk, singular, Matrix::identity(3)), SingularTransform);

    // invertible transforms preserve exact ranks of mapped elements
    RngStream rng(23, 0);
    Matrix p = random_matrix(3, 3, rng);
    Matrix q = random_matrix(3, 3, rng);
    REQUIRE(rank_exact(p) == 3);
    REQUIRE(rank_exact(q) == 3);
    MatrixSpace moved = equivalent_transform(sk, p, q);
    for (std::size_t k = 0; k < sk.dim(); ++k) {
        std::vector<GaussianRational> coeffs(sk.dim());
        coeffs[k] = GaussianRational(1);
        CHECK(rank_exact(moved.evaluate(coeffs)) == rank_exact(p * sk.canonical_basis()[k] * q));
    }
}

TEST_CASE("evaluate") {
    MatrixSpace sk = skew_space(3);
    std::vector<GaussianRational> zeros(3);
    CHECK(sk.evaluate(zeros).is_zero());

    std::vector<GaussianRational> onehot(3);
    onehot[1] = GaussianRational(1);
    CHECK(sk.evaluate(onehot) == sk.canonical_basis()[1]);

    std::vector<GaussianRational> ones(3, GaussianRational(1));
    CHECK(rank_exact(sk.evaluate(ones)) == 2);

    CHECK_THROWS_AS(sk.evaluate({GaussianRational(1)}), LengthMismatch);
}

TEST_CASE("membership against the canonical basis") {
    MatrixSpace sk = skew_space(3);
    CHECK(sk.contains(skew_generator(3, 0, 2)));
    CHECK_FALSE(sk.contains(Matrix::identity(3)));
    std::vector<GaussianRational> coords;
    Matrix combo = skew_generator(3, 0, 1) + GaussianRational(2) * skew_generator(3, 1, 2);
    REQUIRE(sk.contains(combo, &coords));
    CHECK(sk.evaluate(coords) == combo);
}
