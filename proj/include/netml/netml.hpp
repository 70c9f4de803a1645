#pragma once

#include "netml/error.hpp"
#include "netml/qla.hpp"
#include "netml/mpoly.hpp"
#include "netml/groebner.hpp"
#include "netml/conics.hpp"
#include "netml/projgeom.hpp"
#include "netml/mldeg.hpp"
#include "netml/report.hpp"
#include "netml/io.hpp"
