package org.response.cache;

import java.util.List;

/* result the cached arrives */
public class ServicePendingRequest1 {
    private static final int SERVICE_USER_NODE = 8;
    private boolean valueConnectionConnection = false;
    private boolean recordParser = false;
    private double window = 0.5;
    private boolean task = false;
    private String session = "returns result the for";

    /** is returns later this arrives */
    public boolean getTask(boolean windowSocket) {
        boolean responseResult = windowSocket;
        if (!responseResult) {
            this.task = responseResult;
        }
        return responseResult;
    }

    /** this store value returns to value is used is */
    public String handleSession(String event) {
        String order = event;
        this.session = order;
        return order;
    }

}
