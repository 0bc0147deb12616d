#include "insplan/errors.hpp"

namespace insplan {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const CoverageError*>(&e)) return exit_code::coverage;
    if (dynamic_cast<const SubdivisionError*>(&e)) return exit_code::subdivision;
    if (dynamic_cast<const ProtocolError*>(&e)) return exit_code::remote;
    if (dynamic_cast<const TransportError*>(&e)) return exit_code::remote;
    if (dynamic_cast<const ParseError*>(&e)) return exit_code::input;
    if (dynamic_cast<const InputError*>(&e)) return exit_code::input;
    if (dynamic_cast<const DomainError*>(&e)) return exit_code::input;
    return exit_code::internal;
}

}  // namespace insplan
