# octajones - Colored Jones state sums and octahedral gluing equations of knot diagrams
# Copyright (C) 2026 The octajones developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
from .faces import default_outer_face, rotation_numbers
from .gauss import emit_gauss, parse_gauss
from .labeling import Pass, label_crossings
from .library import KnotEntry, knot_entry, knot_names, load_gauss, load_knot
from .loops import (FULL_KNOT, LemmaReport, LoopClass, check_writhe_linking_lemma,
                    loop_of_crossing, winding_numbers)
from .moves import KinkKind, add_kink, mirror
from .pd import (Crossing, Diagram, emit_pd, from_json, parse_labeled, parse_pd, to_json,
                 writhe)
