#include "segcalc/sign.hpp"

#include "segcalc/errors.hpp"

namespace segcalc {

Sign Sign::from_int(int value) {
    if (value == 1) return plus();
    if (value == -1) return minus();
    throw PreconditionError("sign must be +1 or -1, got " + std::to_string(value));
}

}  // namespace segcalc
