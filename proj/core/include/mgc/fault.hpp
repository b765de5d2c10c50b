// Deliberate fault injection used to demonstrate that the verification suites
// detect broken invariants. Exactly one fault may be armed at a time.
#pragma once

#include <optional>
#include <string>

namespace mgc {

enum class Fault {
    None,
    TensorEpsSign,   // flips the Koszul sign on the second eps term of tensor_mixed
    DropConnecting,  // zeroes the mixed differential produced by to_mixed
    TruncationBound, // off-by-one cut level in truncate_ge
};

Fault active_fault();
void set_fault(Fault f);

// "tensor-eps-sign", "drop-connecting", "truncation-bound", "none".
std::optional<Fault> fault_from_name(const std::string& name);
std::string fault_name(Fault f);

} // namespace mgc
