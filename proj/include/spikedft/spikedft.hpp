#pragma once

#include "spikedft/codec.hpp"
#include "spikedft/dft.hpp"
#include "spikedft/errors.hpp"
#include "spikedft/neuron.hpp"
#include "spikedft/phasor.hpp"
#include "spikedft/serialize.hpp"
#include "spikedft/svg.hpp"
#include "spikedft/table.hpp"
