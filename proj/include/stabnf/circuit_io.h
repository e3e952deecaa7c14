#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "stabnf/circuit.h"

namespace stabnf {

/// Syntax or validation error in circuit text; line() is 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &message);
    size_t line() const { return line_; }

   private:
    size_t line_;
};

/// Parses the text format:
///
///     # comment
///     qubits 3
///     H 0
///     CX 0 1        control first, so this is the internal Gate::cnot(1, 0)
///     GPHASE 3      multiplies the circuit by e^{3 i pi/4}
///
/// Mnemonics: H P PDG X Y Z CX CZ SWAP GPHASE. Anything else (T included) is rejected.
Circuit parse_circuit(std::string_view text);

/// Rewrites every gate over {H, P, CX}. The accumulated phase (Y = i X Z) is added to
/// the circuit phase.
Circuit desugar(const Circuit &c);

struct EmitOptions {
    /// Prefix each non-empty layer with "# layer <kind> (<name>)".
    bool layer_banners = true;
    /// Write the GPHASE line even when the phase is zero.
    bool always_phase = true;
};

/// Emits a circuit; the GPHASE line is written only for a nonzero phase.
std::string emit_circuit(const Circuit &c);
std::string emit_layered(const LayeredCircuit &c, const EmitOptions &options = {});

}  // namespace stabnf
