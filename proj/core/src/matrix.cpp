#include "longknot/matrix.hpp"

namespace longknot {

template class Matrix<Rational>;
template class Matrix<GaussianRational>;
template class Matrix<GF2>;

}  // namespace longknot
