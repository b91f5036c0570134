#pragma once

#include "insdel/bounds.hpp"
#include "insdel/channel.hpp"
#include "insdel/core.hpp"
#include "insdel/decoder.hpp"
#include "insdel/gf.hpp"
#include "insdel/outer.hpp"
#include "insdel/rational.hpp"
#include "insdel/rng.hpp"
#include "insdel/sync.hpp"
