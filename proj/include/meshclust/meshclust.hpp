#pragma once

#include "meshclust/errors.hpp"
#include "meshclust/laurent.hpp"
#include "meshclust/quiver.hpp"
#include "meshclust/mesh.hpp"
#include "meshclust/exchange.hpp"
#include "meshclust/cluster.hpp"
#include "meshclust/rigidpath.hpp"
#include "meshclust/euler.hpp"
#include "meshclust/minors.hpp"
#include "meshclust/io.hpp"
#include "meshclust/verify.hpp"
