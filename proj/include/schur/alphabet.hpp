#pragma once

namespace schur {

// Letters are 1..d internally. Outside the library, d = 2 uses the qubit
// alphabet {0, 1}; every other d keeps 1..d.
inline int external_letter_offset(int d) { return d == 2 ? -1 : 0; }

inline int to_external_letter(int letter, int d) { return letter + external_letter_offset(d); }
inline int from_external_letter(int letter, int d) { return letter - external_letter_offset(d); }

}  // namespace schur
