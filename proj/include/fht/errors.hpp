#pragma once

#include <stdexcept>
#include <string>

namespace fht {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define FHT_DEFINE_ERROR(Name)                      \
    struct Name : Error {                           \
        using Error::Error;                         \
    }

FHT_DEFINE_ERROR(ParameterOutOfRange);
FHT_DEFINE_ERROR(NotOnUnitCircle);
FHT_DEFINE_ERROR(EvaluationAtSingularity);
FHT_DEFINE_ERROR(GridTooCoarse);
FHT_DEFINE_ERROR(LengthMismatch);
FHT_DEFINE_ERROR(DimensionMismatch);
FHT_DEFINE_ERROR(ConvergenceFailure);
FHT_DEFINE_ERROR(SymbolVanishesOnCircle);
FHT_DEFINE_ERROR(NonIntegerWinding);
FHT_DEFINE_ERROR(UnwrapFailure);
FHT_DEFINE_ERROR(TooCloseToBoundary);
FHT_DEFINE_ERROR(WrongWinding);
FHT_DEFINE_ERROR(SingularDesign);
FHT_DEFINE_ERROR(ConfigError);
FHT_DEFINE_ERROR(IoError);

#undef FHT_DEFINE_ERROR

}  // namespace fht
