from theta_orbits.characters.decompose import branch_O, branch_one, decompose, multiplicity
from theta_orbits.characters.formal import FormalCharacter, GroupFactor, O, ProductGroup, U
from theta_orbits.characters.graded import (
    GradedCharacter,
    fock_graded_character,
    nullcone_graded_character,
    pprime_graded_character,
)
from theta_orbits.characters.ideal_oracle import quotient_dims
from theta_orbits.characters.irreps import irrep_character, label_dim, o_dim, product_irrep_character, u_dim
from theta_orbits.characters.isotropy import case1_isotropy_dim, case2_isotropy_dim
from theta_orbits.characters.labels import OLabel, from_partition, make_o_label, to_partition
from theta_orbits.characters.spectrum import KTypeSpectrum, theta_sigma_spectrum
