#ifndef AIRPOCKETS_AIRPOCKETS_HPP
#define AIRPOCKETS_AIRPOCKETS_HPP

#include "airpockets/error.hpp"
#include "airpockets/path.hpp"
#include "airpockets/series.hpp"
#include "airpockets/series_system.hpp"
#include "airpockets/oracle.hpp"
#include "airpockets/catalog.hpp"
#include "airpockets/bijections.hpp"
#include "airpockets/oeis.hpp"
#include "airpockets/verify.hpp"

#endif // AIRPOCKETS_AIRPOCKETS_HPP
