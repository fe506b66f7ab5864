"""Registry of the statements a report can certify.

Every claim in a report carries one of these ids; the text says what was
checked, in the engine's own terms.
"""

STATEMENTS: dict[str, str] = {
    # scalar arithmetic
    "arith.lucas": "binomial coefficients mod p via base-p digits agree with exact binomials",
    "arith.vandermonde": "sum_s binom(A, i-s) binom(B, s) = binom(A+B, i)",
    # Hopf algebra maps
    "hopf.composition_law": "raising s then t boxes equals binom(s+t, t) times raising s+t boxes",
    "hopf.commuting_square": "raising maps by s and by t commute",
    "hopf.vanishing_composite": "for 0 < t < p, raising t then p-t boxes (either order) is zero",
    "hopf.weight_preservation": "every raising-map entry joins basis vectors of equal weight",
    "hopf.coassociativity": "(Delta x 1) Delta = (1 x Delta) Delta",
    "hopf.associativity": "m (m x 1) = m (1 x m)",
    "hopf.exterior_sign": "m . Delta = binom(a+b, a) on exterior powers",
    # modules
    "modules.weyl_dimension": "dim of the Weyl-module quotient equals the semistandard tableau count, for every p",
    "modules.weyl_character": "character of the Weyl-module quotient is the Schur polynomial of its shape",
    "modules.schur_character": "character of the Schur-module quotient is the Schur polynomial of the transposed shape",
    "modules.schur_dimension_formula": "dim L_(a,b) = binom(n,a) binom(n,b) - binom(n,a+1) binom(n,b-1)",
    "modules.carter_payne_weyl": "under d < p^e, a-b+d+1 = 0 mod p^e the raising map descends to a nonzero map of Weyl modules (n >= 2)",
    "modules.carter_payne_schur": "the same congruences give a well-defined map of Schur modules, nonzero when a+d <= n",
    "modules.composite_vanishes": "raising d then p-d boxes is zero already on the quotients",
    "modules.induced_weights": "induced maps join quotient basis vectors of equal weight",
    # complexes
    "complex.d_squared": "consecutive differentials compose to zero",
    "complex.euler": "alternating sum of term dims equals alternating sum of homology dims",
    "complex.content_decomposition": "homology is the sum of homology of fixed x_n-content subcomplexes",
    "complex.K.concentration": "K_*(r,d) has homology only in degree 0",
    "complex.K.h0_dimension": "for p = 2, dim H_0 K_*(r,1) = binom(n + r/2 - 1, n - 1)",
    "complex.K.h0_character": "for p = 2, char H_0 K_*(r,1) = h_{r/2}(x_1^2, ..., x_n^2)",
    "complex.L.concentration": "L_*(r,d) has homology only in degree floor(r/p)",
    "complex.L.top_dimension": "for p = 2, dim H_{r/2} L_*(r,1) = binom(n, r/2)",
    "complex.L.top_character": "for p = 2, char H_{r/2} L_*(r,1) = e_{r/2}(x_1^2, ..., x_n^2)",
    "complex.K.binomial_ranks": "for n = 2 kernel and image dims match the binomial counts of standard tableaux",
    "complex.MN.concentration": "for n = 2, p = 2 the M and N complexes have homology only in degree 0",
    "complex.MN.length": "the M and N complexes have length floor(r/4)",
    "complex.schur_sum_identity": "2 sum_j (-1)^j binom(n, k+j) binom(n, k-j) = binom(n, k) + binom(n, k)^2",
    "complex.profile": "homology profile of one complex (reporting only)",
    # symmetric functions
    "identity.alternating": "h_k(x_1^2, ..., x_n^2) = sum_j (-1)^j s_(2k-j, j)",
    "identity.jacobi_trudi": "tableau Schur polynomials agree with det(h_{lambda_i - i + j})",
    # Weyl filtration dimension
    "wfd.value": "closed form for wfd S(2, r)",
    "wfd.sandwich": "witness length = closed form = digit upper bound",
    "wfd.factor_check": "each witness has a top Weyl factor missing from the next term",
    "wfd.witness_concentration": "each witness complex has homology only in degree 0",
    # single-object reports
    "modules.dimension": "dimension and character of one quotient module (reporting only)",
    "modules.carter_payne": "well-definedness and rank of one induced map",
}
