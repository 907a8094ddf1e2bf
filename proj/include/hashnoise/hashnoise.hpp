#ifndef HASHNOISE_HASHNOISE_HPP
#define HASHNOISE_HASHNOISE_HPP

#include "hashnoise/analysis.hpp"
#include "hashnoise/bench.hpp"
#include "hashnoise/gradient.hpp"
#include "hashnoise/hashes.hpp"
#include "hashnoise/noise.hpp"
#include "hashnoise/render.hpp"
#include "hashnoise/shadergen.hpp"
#include "hashnoise/word32.hpp"

#endif
