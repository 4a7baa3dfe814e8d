#pragma once

#include <stdexcept>
#include <string>

namespace hecke
{

// Root of every error raised by the library. Each contract violation named in
// the public API has its own subclass so callers can catch precisely.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define HECKE_DEFINE_ERROR(Name)                                                                                       \
    class Name : public Error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}                                           \
    }

HECKE_DEFINE_ERROR(NotDivisible);
HECKE_DEFINE_ERROR(DivisionByZero);
HECKE_DEFINE_ERROR(NotLaurent);
HECKE_DEFINE_ERROR(VarMismatch);
HECKE_DEFINE_ERROR(UnassignedVariable);
HECKE_DEFINE_ERROR(NonUnitConstantTerm);
HECKE_DEFINE_ERROR(LengthMismatch);
HECKE_DEFINE_ERROR(IndexOutOfRange);
HECKE_DEFINE_ERROR(NotSymmetric);
HECKE_DEFINE_ERROR(UnsupportedRank);
HECKE_DEFINE_ERROR(EnumerationTooLarge);
HECKE_DEFINE_ERROR(NonVanishingTail);
HECKE_DEFINE_ERROR(NoSolution);
HECKE_DEFINE_ERROR(NonUniqueSolution);
HECKE_DEFINE_ERROR(FunctionalEquationViolated);
HECKE_DEFINE_ERROR(ParseError);
HECKE_DEFINE_ERROR(InvalidArgument);

#undef HECKE_DEFINE_ERROR

} // namespace hecke
