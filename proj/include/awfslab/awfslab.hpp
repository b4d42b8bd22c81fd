#pragma once

#include "awfslab/error.hpp"
#include "awfslab/category.hpp"
#include "awfslab/functor.hpp"
#include "awfslab/enumerate.hpp"
#include "awfslab/fixtures.hpp"
#include "awfslab/squares.hpp"
#include "awfslab/structured.hpp"
#include "awfslab/lifting.hpp"
#include "awfslab/transport.hpp"
#include "awfslab/frobenius.hpp"
#include "awfslab/model.hpp"
#include "awfslab/samples.hpp"
#include "awfslab/generate.hpp"
#include "awfslab/io.hpp"
#include "awfslab/harness.hpp"
#include "awfslab/cli.hpp"
