"""Which check covers which identity.

Keys are check-name prefixes emitted by the suites; values describe the
statement checked.  A test asserts that a full run emits every key.
"""

COVERAGE = {
    # definitions and the series
    "eigen/L-psi": "eigenfunction equation for psi_n in the conjugated L form",
    "eigen/E-p": "eigenfunction equation for p_n with the A_I coefficients",
    "eigen/L-dual": "the dual equation in s acting on psi_n",
    "duality/psi-swap": "x <-> s symmetry of psi_n",
    "duality/phi-swap": "x <-> s symmetry of phi_n",
    "duality/phi-leading": "leading coefficients of phi_n in x and in s",
    "duality/F-cap-coherence": "F_n w-coefficients stable under larger w caps",
    "duality/restriction": "psi_n restricted to x_2/x_1 = 0 is psi_{n-1}",
    "tqt/psi": "psi_n invariant under t -> q/t",
    "tqt/p-transform": "p_n(q,t) = gauge * p_n(q,q/t)",
    "tqt/q-euler": "q-Euler transformation for n = 2",
    "tqt/p2-2phi1": "p_2 as a 2phi1 series",
    "poles/grid": "at most simple poles of the coefficients of p_n",
    "poles/cancellation": "apparent poles of c_n cancel after summation",
    "recurrences/c-column": "column recursion of c_n",
    "recurrences/jackson": "Jackson-sum recurrence phi_n -> phi_{n+1}",
    "recurrences/kop-explicit": "explicit double-sum recurrence psi_n -> psi_{n+1}",
    "recurrences/kop-composed": "the same recurrence as a product of two K operators",
    "recurrences/K-eigen": "psi_n is an eigenfunction of K(u)",
    "macdonald/specialization": "x^lambda p_n(x; t^delta q^lambda) = P_lambda",
    "macdonald/D-eigen": "D_r eigenvalues e_r(t^delta q^lambda)",
    "macdonald/monic-symmetric": "tableau sum gives a monic symmetric polynomial",
    "macdonald/duality": "evaluation duality of normalized P_lambda",
    "macdonald/evaluation": "the two principal evaluation displays and substitution",
    "wronski/residual": "Wronski relations on eigenvalues",
    "wronski/pointwise": "D(u)H(u) = D(tu)H(qu) on random symmetric polynomials",
    "wronski/H-displays": "row-type operator in its two displays",
    "wronski/H-eigen": "H(u) eigenvalue prod (t u s_i)_oo/(u s_i)_oo",
    "principal/exact": "p_n(x; t^delta) = 1",
    "principal/summation": "principal specialization summation formula",
    "n3/closed-p": "n = 3 transformation of p_3",
    "n3/double-sum": "n = 3 coefficient as a terminating double sum",
    "n3/w14": "n = 3 coefficient sum as a 14W13",
    "n3/phi-point": "n = 3 symmetric k-sum for phi_3 and its x <-> s invariance",
    "n2/closed-forms": "F_2 closed forms in t and q/t against the series",
    "n2/closed-point": "F_2 closed forms at a point",
    "hypergeom/vwp-root-reduction": "very-well-poised reduction with root pairs",
    "hypergeom/w10-to-5phi4": "10W9 sum reduced to a 5phi4 sum",
    "hypergeom/order-exchange": "order exchange after expanding 10W9",
    "hypergeom/saalschutz": "q-Saalschutz summation",
}
