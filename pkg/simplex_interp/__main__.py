from simplex_interp.main import cli

cli(prog_name="simplex_interp")
