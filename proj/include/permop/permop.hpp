#pragma once

#include "permop/poset.hpp"
#include "permop/seqcomb.hpp"
#include "permop/trees.hpp"
#include "permop/decomposition.hpp"
#include "permop/gf2.hpp"
#include "permop/smith.hpp"
#include "permop/homology.hpp"
#include "permop/parallel.hpp"
#include "permop/cellcx.hpp"
#include "permop/geometry.hpp"
#include "permop/operad.hpp"
#include "permop/export.hpp"
#include "permop/verify.hpp"
