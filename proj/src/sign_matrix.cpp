#include "hadz/sign_matrix.hpp"

namespace hadz {

SignMatrix pointwise(const SignMatrix& a, const SignMatrix& b) {
    SignMatrix r(a.size());
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j)
            r.set(i, j, static_cast<int8_t>(a.at(i, j) * b.at(i, j)));
    return r;
}

} // namespace hadz
