#pragma once

#include <stdexcept>
#include <string>

namespace qrs {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateGram : std::runtime_error {
  explicit DegenerateGram(const std::string& what) : std::runtime_error(what) {}
};

struct InadmissibleProduct : std::runtime_error {
  explicit InadmissibleProduct(const std::string& what) : std::runtime_error(what) {}
};

struct NoIntegralBasis : std::runtime_error {
  explicit NoIntegralBasis(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& what) : std::runtime_error(what) {}
};

struct BadParams : std::runtime_error {
  explicit BadParams(const std::string& what) : std::runtime_error(what) {}
};

struct GradeOverflow : std::runtime_error {
  explicit GradeOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qrs
