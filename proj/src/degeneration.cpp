#include "qbethe/degeneration.hpp"

#include "qbethe/errors.hpp"
#include "qbethe/rmatrix.hpp"
#include "qbethe/series.hpp"

namespace qbethe {

ExponentTriple exponentTriple(const std::vector<long long>& sizes) {
    const int N = static_cast<int>(sizes.size());
    if (N < 1) {
        throw InvalidArgError("exponent triple needs at least one size");
    }
    for (long long s : sizes) {
        if (s < 0) {
            throw InvalidArgError("negative part size");
        }
    }
    const auto m = [&](int j) { return sizes[static_cast<std::size_t>(j - 1)]; };
    long long n = 0;
    for (long long s : sizes) {
        n += s;
    }
    ExponentTriple out;
    for (int j = 2; j <= N; ++j) {
        out.alpha += (j - 1) * m(j);
        out.beta += m(j);
    }
    out.alpha *= n;
    out.beta *= n;
    for (int j = 2; j <= N - 1; ++j) {
        long long above = 0;
        for (int l = j + 1; l <= N; ++l) {
            above += m(l);
        }
        long long below = 0;
        for (int l = 1; l <= j - 1; ++l) {
            below += m(l);
        }
        out.gamma += above * below;
    }
    for (int j = 1; j <= N - 2; ++j) {
        for (int k = j + 1; k <= N - 1; ++k) {
            out.gamma += (2 * j - 1) * m(k + 1) * m(j + 1);
        }
    }
    for (int j = 2; j <= N - 1; ++j) {
        out.gamma += (j - 1) * m(j + 1) * m(j + 1);
    }
    return out;
}

bool exponentIdentityHolds(const std::vector<long long>& sizes) {
    const ExponentTriple t = exponentTriple(sizes);
    return t.alpha == t.beta + t.gamma;
}

bool degenerateRCheck(int N, const Rat& x, const Rat& y, const Rat& h) {
    if (N < 2) {
        throw InvalidArgError("degeneration check needs rank at least 2");
    }
    const int order = 2;
    const TruncatedSeries u = TruncatedSeries::exponential(x, order);
    const TruncatedSeries v = TruncatedSeries::exponential(y, order);
    const TruncatedSeries q =
        TruncatedSeries::exponential(h / Rat(2), order);
    for (int a = 1; a <= N; ++a) {
        for (int b = 1; b <= N; ++b) {
            for (int c = 1; c <= N; ++c) {
                for (int d = 1; d <= N; ++d) {
                    const TruncatedSeries trig =
                        rElement(RFlavor::TrigB, q, u, v, a, b, c, d);
                    const Rat rat =
                        rElement(RFlavor::Rational, h, x, y, a, b, c, d);
                    if (!trig.coeff(0).isZero() || trig.coeff(1) != rat) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace qbethe
