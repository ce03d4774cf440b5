namespace punct {}
