#include <cyclin/ainfty.hpp>
