#include "wproj/error.hpp"

namespace wproj {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain:
      return "E_DOMAIN";
    case ErrorCode::kPrecondition:
      return "E_PRECONDITION";
    case ErrorCode::kInfiniteHeight:
      return "E_INFINITE_HEIGHT";
    case ErrorCode::kParse:
      return "E_PARSE";
    case ErrorCode::kConfig:
      return "E_CONFIG";
  }
  return "E_UNKNOWN";
}

}  // namespace wproj
