#include "gitfan/error.hpp"

namespace gitfan {

std::string to_string(ValidationError::Kind kind) {
  using K = ValidationError::Kind;
  switch (kind) {
    case K::Shape: return "Shape";
    case K::FullRank: return "FullRank";
    case K::NotHomogeneous: return "NotHomogeneous";
    case K::MonomialGenerator: return "MonomialGenerator";
    case K::ContainsMonomial: return "ContainsMonomial";
    case K::UnknownVariable: return "UnknownVariable";
    case K::BadPermutation: return "BadPermutation";
    case K::BadSigns: return "BadSigns";
    case K::NotASymmetry: return "NotASymmetry";
    case K::NotInvariant: return "NotInvariant";
    case K::DataLength: return "DataLength";
    case K::Digest: return "Digest";
  }
  return "Unknown";
}

}  // namespace gitfan
