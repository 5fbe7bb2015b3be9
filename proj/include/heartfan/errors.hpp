#pragma once

#include <stdexcept>
#include <string>

namespace heartfan {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HEARTFAN_ERROR(Name)                    \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

HEARTFAN_ERROR(DimensionError);
HEARTFAN_ERROR(DegenerateInput);
HEARTFAN_ERROR(ContainmentError);
HEARTFAN_ERROR(FaceError);
HEARTFAN_ERROR(CofanAxiomViolation);
HEARTFAN_ERROR(MembershipError);
HEARTFAN_ERROR(SchemaError);
HEARTFAN_ERROR(AdditivityError);
HEARTFAN_ERROR(InvariantError);
HEARTFAN_ERROR(ChargeError);
HEARTFAN_ERROR(SupportError);
HEARTFAN_ERROR(ResourceError);
HEARTFAN_ERROR(ConsistencyError);
HEARTFAN_ERROR(UnsupportedRank);
HEARTFAN_ERROR(SpecError);

#undef HEARTFAN_ERROR

}  // namespace heartfan
