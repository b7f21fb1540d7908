#ifndef RESONEST_RESONEST_HPP
#define RESONEST_RESONEST_HPP

#include "resonest/dsp.hpp"
#include "resonest/error.hpp"
#include "resonest/extraction.hpp"
#include "resonest/reflection.hpp"
#include "resonest/signal_io.hpp"
#include "resonest/signals.hpp"
#include "resonest/spectral.hpp"
#include "resonest/synthesis.hpp"

#endif
