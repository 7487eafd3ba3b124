from zetafrac.cli.main import main

raise SystemExit(main())
