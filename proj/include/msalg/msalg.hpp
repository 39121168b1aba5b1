// Umbrella header.
#pragma once

#include "msalg/algebra.hpp"
#include "msalg/catalog.hpp"
#include "msalg/common.hpp"
#include "msalg/criteria.hpp"
#include "msalg/fq.hpp"
#include "msalg/groups.hpp"
#include "msalg/groupspec.hpp"
#include "msalg/json_io.hpp"
#include "msalg/linalg.hpp"
#include "msalg/oracle.hpp"
#include "msalg/poly.hpp"
#include "msalg/structure.hpp"
