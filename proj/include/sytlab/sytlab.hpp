#pragma once

#include "sytlab/bigint.hpp"
#include "sytlab/bijections.hpp"
#include "sytlab/core.hpp"
#include "sytlab/enumeration.hpp"
#include "sytlab/errors.hpp"
#include "sytlab/identities.hpp"
#include "sytlab/notation.hpp"
