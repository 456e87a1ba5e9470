#ifndef QID_QID_HPP
#define QID_QID_HPP

#include "qid/errors.hpp"
#include "qid/rational.hpp"
#include "qid/field.hpp"
#include "qid/polynomial.hpp"
#include "qid/rational_function.hpp"
#include "qid/summation.hpp"
#include "qid/qseries.hpp"
#include "qid/interpolation.hpp"
#include "qid/grid.hpp"
#include "qid/report.hpp"
#include "qid/identities.hpp"
#include "qid/serialize.hpp"
#include "qid/points_file.hpp"

#endif  // QID_QID_HPP
