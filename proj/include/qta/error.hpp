#pragma once

#include <stdexcept>
#include <string>

namespace qta {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Two scalars from different base fields met in one operation. */
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

/* Tensor shapes disagree with the ambient split space. */
struct DimMismatch : Error {
    explicit DimMismatch(const std::string& msg) : Error(msg) {}
};

/* 1/k! was requested in a field whose characteristic divides k!. */
struct CharacteristicError : Error {
    explicit CharacteristicError(const std::string& msg) : Error(msg) {}
};

/* An L-infinity evaluation needed an arity beyond the degree window. */
struct WindowOverflow : Error {
    explicit WindowOverflow(const std::string& msg) : Error(msg) {}
};

/* Input data failed an axiom that a constructor checks eagerly.
 * `witness` carries the axiom name and the basis tuple that broke it. */
struct ValidationError : Error {
    std::string witness;
    ValidationError(const std::string& msg, std::string w)
        : Error(msg + " [" + w + "]"), witness(std::move(w)) {}
};

}  // namespace qta
