#pragma once

// Radon-projection texture features of scanned handwritten strips:
// entropy-of-projection generalized slant, column-occupancy autocorrelation,
// synthetic ground-truth strips and a provisional feature distance.

#include "striptex/angles.hpp"
#include "striptex/classify.hpp"
#include "striptex/error.hpp"
#include "striptex/format.hpp"
#include "striptex/image.hpp"
#include "striptex/radon.hpp"
#include "striptex/report.hpp"
#include "striptex/seqfeat.hpp"
#include "striptex/slant.hpp"
#include "striptex/synth.hpp"
