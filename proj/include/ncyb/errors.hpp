// Error taxonomy shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace ncyb {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// Mixing scalars from different variable registries / truncation orders.
struct TowerMismatch : Error {
    explicit TowerMismatch(const std::string& m) : Error("TowerMismatch: " + m) {}
};

// Division by zero or inversion of a non-invertible scalar.
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& m) : Error("NotInvertible: " + m) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& m) : Error("ShapeError: " + m) {}
};

struct LabelError : Error {
    explicit LabelError(const std::string& m) : Error("LabelError: " + m) {}
};

// Singular matrix in field/block inversion.
struct Singular : Error {
    explicit Singular(const std::string& m) : Error("Singular: " + m) {}
};

// A required inner quasi-determinant or minor is not invertible.
struct SingularQuasiDet : Error {
    explicit SingularQuasiDet(const std::string& m) : Error("SingularQuasiDet: " + m) {}
};

struct NotNilpotent : Error {
    explicit NotNilpotent(const std::string& m) : Error("NotNilpotent: " + m) {}
};

struct WeightError : Error {
    explicit WeightError(const std::string& m) : Error("WeightError: " + m) {}
};

// A classical minor determinant vanished.
struct ZeroMinor : Error {
    explicit ZeroMinor(const std::string& m) : Error("ZeroMinor: " + m) {}
};

// Commutator has a nonvanishing classical part; bracket undefined.
struct NotQuasiCommutative : Error {
    explicit NotQuasiCommutative(const std::string& m) : Error("NotQuasiCommutative: " + m) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error("UsageError: " + m) {}
};

} // namespace ncyb
