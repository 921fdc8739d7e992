#pragma once

#include "reeb/band.hpp"
#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"
#include "reeb/io.hpp"
#include "reeb/oracle.hpp"
#include "reeb/persistence.hpp"
#include "reeb/smoothing.hpp"
#include "reeb/svg.hpp"
#include "reeb/tolerance.hpp"
#include "reeb/transport.hpp"
#include "reeb/vineyard.hpp"
