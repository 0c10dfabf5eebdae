# Range sweeps and completion certificates
