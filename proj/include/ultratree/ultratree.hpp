#pragma once

#include "diametrical.hpp"
#include "io.hpp"
#include "labeled_tree.hpp"
#include "oracle.hpp"
#include "proptest.hpp"
#include "rational.hpp"
#include "represent.hpp"
#include "space.hpp"
#include "ugvl.hpp"
