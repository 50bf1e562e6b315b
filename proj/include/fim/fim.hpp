#pragma once

#include "fim/apriori.hpp"
#include "fim/bench.hpp"
#include "fim/core.hpp"
#include "fim/io.hpp"
#include "fim/mfif.hpp"
#include "fim/oracle.hpp"
#include "fim/report.hpp"
#include "fim/rules.hpp"
#include "fim/support.hpp"
