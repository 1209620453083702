#pragma once

#include "spincover/bits.hpp"
#include "spincover/congruence.hpp"
#include "spincover/covering.hpp"
#include "spincover/fox.hpp"
#include "spincover/group_ring.hpp"
#include "spincover/quadform.hpp"
#include "spincover/stabilizers.hpp"
#include "spincover/symplectic.hpp"
#include "spincover/verify.hpp"
