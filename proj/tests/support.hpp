#pragma once

#include "grt/grt.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::QMat to_q(const grt::Matrix<mpq_class>& m) {
    oracle::QMat out(m.size(), oracle::QVec(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) out[r][c] = m(r, c);
    return out;
}

inline std::vector<oracle::QMat> to_q(const grt::Tensor<mpq_class>& t) {
    std::vector<oracle::QMat> out;
    for (const auto& s : t.slices) out.push_back(to_q(s));
    return out;
}

inline grt::Matrix<mpq_class> from_q(const oracle::QMat& m) {
    grt::Matrix<mpq_class> out(m.size(), mpq_class(0));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = m[r][c];
    return out;
}

inline grt::Tower<grt::RationalRing> q_tower(std::initializer_list<long long> moduli) {
    return {grt::make_group(moduli), grt::RationalRing{}};
}

}  // namespace support
