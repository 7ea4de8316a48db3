#pragma once

#include "juror/analyses.hpp"
#include "juror/charges.hpp"
#include "juror/dispositions.hpp"
#include "juror/epistemic_utility.hpp"
#include "juror/error.hpp"
#include "juror/rational.hpp"
#include "juror/world_model.hpp"
