#include "gafz/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gafz {

void ModelSpec::validate() const {
    switch (family) {
        case Family::Identity:
        case Family::Fgn0:
            break;
        case Family::Tridiagonal:
            if (!(std::abs(q) < 0.5)) {
                std::ostringstream os;
                os << "tridiagonal family requires |q| < 1/2, got q = " << q;
                throw std::domain_error(os.str());
            }
            break;
        case Family::Kms:
            if (!(std::abs(q) < 1.0)) {
                std::ostringstream os;
                os << "KMS family requires |q| < 1, got q = " << q;
                throw std::domain_error(os.str());
            }
            break;
        case Family::Fgn:
            if (!(h > 0.0 && h < 1.0)) {
                std::ostringstream os;
                os << "fGn family requires 0 < h < 1, got h = " << h;
                throw std::domain_error(os.str());
            }
            break;
    }
}

std::string ModelSpec::name() const {
    std::ostringstream os;
    os << family_name(family);
    if (family == Family::Tridiagonal || family == Family::Kms) os << "(q=" << q << ")";
    if (family == Family::Fgn) os << "(h=" << h << ")";
    return os.str();
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Identity: return "iid";
        case Family::Tridiagonal: return "tridiag";
        case Family::Kms: return "kms";
        case Family::Fgn: return "fgn";
        case Family::Fgn0: return "fgn0";
    }
    return "?";
}

const char* cov_mode_name(CovMode m) {
    return m == CovMode::InverseOfG ? "inverse" : "direct";
}

}  // namespace gafz
