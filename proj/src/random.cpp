#include "ordss/random.hpp"

namespace ordss {

FpRowVector random_data_vector(FieldOrder q, Index m, std::uint64_t seed) {
    SplitMix64 rng(seed);
    FpRowVector x(m);
    for (Index i = 0; i < m; ++i) x(i) = Fp(rng.next_below(q.value()), q);
    return x;
}

FpMatrix random_matrix(FieldOrder q, Index rows, Index cols, SplitMix64& rng) {
    FpMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) m(i, j) = Fp(rng.next_below(q.value()), q);
    }
    return m;
}

}  // namespace ordss
