#pragma once

#include "multishell/core.hpp"
#include "multishell/decomposition.hpp"
#include "multishell/filtration.hpp"
#include "multishell/io.hpp"
#include "multishell/multicomplex.hpp"
#include "multishell/shellability.hpp"
