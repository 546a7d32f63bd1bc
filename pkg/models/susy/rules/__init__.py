from models.susy.rules.maxwell4 import build_maxwell4
from models.susy.rules.rigid4 import build_rigid4
from models.susy.rules.rigid6 import build_rigid6
from models.susy.rules.tensor6 import build_offshell, build_onshell
