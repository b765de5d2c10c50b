#include "mgc/fault.hpp"

namespace mgc {

namespace {
Fault g_fault = Fault::None;
}

Fault active_fault() { return g_fault; }
void set_fault(Fault f) { g_fault = f; }

std::optional<Fault> fault_from_name(const std::string& name) {
    if (name == "none") return Fault::None;
    if (name == "tensor-eps-sign") return Fault::TensorEpsSign;
    if (name == "drop-connecting") return Fault::DropConnecting;
    if (name == "truncation-bound") return Fault::TruncationBound;
    return std::nullopt;
}

std::string fault_name(Fault f) {
    switch (f) {
    case Fault::TensorEpsSign: return "tensor-eps-sign";
    case Fault::DropConnecting: return "drop-connecting";
    case Fault::TruncationBound: return "truncation-bound";
    default: return "none";
    }
}

} // namespace mgc
