#pragma once

// Umbrella header for the library. The CLI front end lives in cli.hpp and is
// not included here since it pulls in CLI11.

#include "abelianization.hpp"
#include "covering_tower.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "metacyclic.hpp"
#include "orbifold.hpp"
#include "presentation.hpp"
#include "rational.hpp"
#include "s3_isometry.hpp"
#include "seifert.hpp"
#include "todd_coxeter.hpp"
