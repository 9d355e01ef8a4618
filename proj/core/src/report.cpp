#include "vira/report.hpp"

#include <stdexcept>

namespace vira {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::input_error:
      return "input_error";
  }
  return "input_error";
}

Status status_from_string(const std::string& text) {
  if (text == "pass") return Status::pass;
  if (text == "fail") return Status::fail;
  if (text == "input_error") return Status::input_error;
  throw std::invalid_argument("unknown status '" + text + "'");
}

}  // namespace vira
