from theta_orbits.unipotent.certificate import UnipotentCertificate, check_special_unipotent, expected_dual_orbit
from theta_orbits.unipotent.duality import bv_dual, dual_type
from theta_orbits.unipotent.infchar import InfChar, delta_vector, half_h_dual, inf_char_theta_L, normalize
