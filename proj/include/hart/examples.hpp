#pragma once

#include "hart/quiver.hpp"

namespace hart::examples {

// Linear A_m: 1 -> 2 -> ... -> m, arrows "a1".."a(m-1)".
Presentation linear_a(int m);

// D4 with all arrows into the central vertex 1: a:2->1, b:3->1, c:4->1.
Presentation d4();

// Auslander algebra of linear A3: six vertices, one commutativity square and
// two zero relations.
Presentation auslander_a3();

// Companion six-vertex algebra with a commutativity square and two zero
// relations, 2-complete but not absolutely.
Presentation lambda_prime();

}  // namespace hart::examples
