#pragma once

#include <stdexcept>
#include <string>

namespace dgf {

// Exit-code classes used by the CLI: verification failures are reported, not
// thrown; exhaustion-type errors map to exit 3, usage/parse errors to exit 2.
enum class ErrClass { contract, exhausted, parse };

class Error : public std::runtime_error {
public:
  Error(std::string id, const std::string& what, ErrClass cls = ErrClass::contract)
      : std::runtime_error(id + ": " + what), id_(std::move(id)), cls_(cls) {}
  const std::string& id() const { return id_; }
  ErrClass cls() const { return cls_; }

private:
  std::string id_;
  ErrClass cls_;
};

#define DGF_ERROR_TYPE(Name, Cls)                                     \
  class Name : public Error {                                         \
  public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what, Cls) {} \
  }

DGF_ERROR_TYPE(ShapeMismatch, ErrClass::contract);
DGF_ERROR_TYPE(DegenerateBasis, ErrClass::contract);
DGF_ERROR_TYPE(LevelOutOfRange, ErrClass::contract);
DGF_ERROR_TYPE(InvalidL, ErrClass::contract);
DGF_ERROR_TYPE(EntryTooSmall, ErrClass::contract);
DGF_ERROR_TYPE(NoWindow, ErrClass::contract);
DGF_ERROR_TYPE(Infeasible, ErrClass::contract);
DGF_ERROR_TYPE(ContractViolation, ErrClass::contract);
DGF_ERROR_TYPE(LevelExhausted, ErrClass::exhausted);
DGF_ERROR_TYPE(PrecisionExhausted, ErrClass::exhausted);
DGF_ERROR_TYPE(SearchExhausted, ErrClass::exhausted);
DGF_ERROR_TYPE(GenerationFailed, ErrClass::exhausted);
DGF_ERROR_TYPE(BigintCapExceeded, ErrClass::exhausted);
DGF_ERROR_TYPE(ParseError, ErrClass::parse);

#undef DGF_ERROR_TYPE

}  // namespace dgf
