#ifndef PUNCTUAL_GOLDEN_HPP
#define PUNCTUAL_GOLDEN_HPP

#include <vector>

namespace punctual::golden {

// Frozen reference data. Verification diffs freshly computed values against
// these rows, so nothing here may ever be produced by the code under test;
// regenerated expectations would witness the code, not the claims.

// Number of O-sequences of total mass k, for k = 1..11.
inline const std::vector<long>& o_sequence_counts() {
    static const std::vector<long> v{1, 1, 2, 3, 5, 8, 12, 18, 27, 40, 57};
    return v;
}

// Number of monomial ideals of colength k in 3 variables, k = 1..11.
inline const std::vector<long>& monomial_counts_n3() {
    static const std::vector<long> v{1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859};
    return v;
}

// Number of strongly stable ideals of colength k, 3 variables, k = 1..11.
inline const std::vector<long>& borel_counts_n3() {
    static const std::vector<long> v{1, 1, 2, 3, 4, 6, 9, 12, 17, 24, 32};
    return v;
}

// Same with n = k variables, k = 1..11.
inline const std::vector<long>& borel_counts_nk() {
    static const std::vector<long> v{1, 1, 2, 3, 5, 8, 13, 20, 32, 50, 77};
    return v;
}

// Strongly stable ideals with T_{>=0} >= 2(k-1), 3 variables, k = 1..11.
inline const std::vector<long>& threshold_counts_n3() {
    static const std::vector<long> v{1, 1, 1, 1, 1, 1, 1, 2, 2, 4, 6};
    return v;
}

// Strongly stable ideals with T_{>=0} >= (n-1)(k-1), n = k variables, k = 1..11.
inline const std::vector<long>& threshold_counts_nk() {
    static const std::vector<long> v{1, 1, 1, 1, 1, 1, 1, 4, 8, 16, 33};
    return v;
}

struct ExceptionalIdeal {
    const char* gens;       // minimal generators, 3 variables
    std::vector<long> hf;   // Hilbert function of the quotient
    long D;                 // T_{>=0} - 2(k-1)
};

// The finitely many non-curvilinear strongly stable ideals in 3 variables
// with colength k <= 11 whose nonnegative tangent sum reaches 2(k-1).
// The curvilinear ideal (x1, x2, x3^k) joins them for every k with D = 0.
inline const std::vector<ExceptionalIdeal>& exceptional_ideals() {
    static const std::vector<ExceptionalIdeal> v{
        {"x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^4", {1, 3, 3, 1}, 0},
        {"x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^5", {1, 3, 3, 1, 1}, 0},
        {"x1*x3, x1*x2, x1^2, x2^2*x3, x2^3, x2*x3^3, x3^5", {1, 3, 3, 2, 1}, 0},
        {"x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^6", {1, 3, 3, 1, 1, 1}, 0},
        {"x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^5", {1, 3, 3, 2, 1}, 2},
        {"x1*x3, x1*x2, x1^2, x2^2*x3, x2^3, x2*x3^3, x3^6", {1, 3, 3, 2, 1, 1}, 0},
        {"x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^7", {1, 3, 3, 1, 1, 1, 1}, 0},
        {"x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^6", {1, 3, 3, 2, 1, 1}, 2},
        {"x2^2, x1*x2, x1^2, x2*x3^3, x1*x3^3, x3^5", {1, 3, 3, 3, 1}, 0},
        {"x1*x2, x1^2, x1*x3^2, x2^2*x3, x2^3, x2*x3^3, x3^5", {1, 3, 4, 2, 1}, 1},
    };
    return v;
}

// O-sequences of mass 11 with H(1) >= 4, H(2) >= 3, H(3) >= 2, lex-ascending.
inline const std::vector<std::vector<long>>& constrained_o_sequences_k11() {
    static const std::vector<std::vector<long>> v{
        {1, 4, 3, 2, 1}, {1, 4, 3, 3}, {1, 4, 4, 2}, {1, 5, 3, 2}};
    return v;
}

struct WitnessTangent {
    const char* dual;  // inverse system, 4 variables
    long t_pos;        // expected positive tangent sum
};

inline const std::vector<WitnessTangent>& witness_tangents() {
    static const std::vector<WitnessTangent> v{
        {"y1^4, y2^3, y3*y4", 17},
        {"y1^4, y2^3, y3^2, y4", 18},
        {"y1^4 + y2^4, y3^2, y4", 14},
        {"y1^3*y2, y3^2, y4", 14},
    };
    return v;
}

struct NBoundSpot {
    long tau, k;
    int n;
    long value;
};

inline const std::vector<NBoundSpot>& n_bound_spots() {
    static const std::vector<NBoundSpot> v{{1, 8, 3, 22}, {2, 11, 4, 52}, {3, 9, 5, 71}};
    return v;
}

}  // namespace punctual::golden

#endif
