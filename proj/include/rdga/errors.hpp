#pragma once
#include <stdexcept>
#include <string>

namespace rdga {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define RDGA_ERROR(Name)                                   \
    struct Name : Error {                                  \
        explicit Name(const std::string& what)             \
            : Error(std::string(#Name ": ") + what) {}     \
    }

RDGA_ERROR(MixedRing);
RDGA_ERROR(NoDerivations);
RDGA_ERROR(NotInvertible);
RDGA_ERROR(NotPositive);
RDGA_ERROR(ChartMismatch);
RDGA_ERROR(DegreeError);
RDGA_ERROR(Inhomogeneous);
RDGA_ERROR(SqrtUnavailable);
RDGA_ERROR(NotRegular);
RDGA_ERROR(LeibnizatorMismatch);
RDGA_ERROR(Overflow);
RDGA_ERROR(NotCleft);
RDGA_ERROR(PerpIdentityFails);
RDGA_ERROR(DeltaNotCompatible);
RDGA_ERROR(NotBimodule);
RDGA_ERROR(NotConformal);
RDGA_ERROR(InvalidMetric);
RDGA_ERROR(UsageError);

#undef RDGA_ERROR

// Parse errors carry a position.
struct ParseError : Error {
    int line, column;
    ParseError(const std::string& what, int line_, int column_)
        : Error("ParseError at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + what),
          line(line_), column(column_) {}
};

}  // namespace rdga
