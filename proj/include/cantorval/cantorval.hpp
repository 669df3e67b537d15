#pragma once

// Umbrella header: exact classification and approximation machinery for
// achievement sets of multigeometric series.

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/sequence.hpp"
#include "cantorval/sigma.hpp"
#include "cantorval/thresholds.hpp"
#include "cantorval/shift.hpp"
#include "cantorval/classify.hpp"
#include "cantorval/cover.hpp"
#include "cantorval/oracle.hpp"
#include "cantorval/certificate.hpp"
#include "cantorval/membership.hpp"
#include "cantorval/scan.hpp"
#include "cantorval/render.hpp"
#include "cantorval/json_io.hpp"
#include "cantorval/cli.hpp"
